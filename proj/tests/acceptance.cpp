// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "oracles.hpp"
#include "symspine/homsearch.hpp"
#include "symspine/reflect.hpp"
#include "symspine/spiny.hpp"

using namespace symspine;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first failure message of a criterion.
class Check {
 public:
  bool expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
    return ok;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  std::ostringstream line;
  line << (c.ok() ? "PASS" : "FAIL") << ' ' << id << ": " << title;
  line.precision(2);
  line << std::fixed << " (" << seconds_since(start) << " s)";
  if (!c.ok()) {
    line << " -- " << c.failure();
    ++failures;
  }
  std::cout << line.str() << std::endl;
}

std::vector<corpus::Entry> everything(int trunc) {
  auto out = corpus::spiny(trunc);
  for (auto& e : corpus::non_spiny(trunc)) out.push_back(std::move(e));
  return out;
}

std::string tuple_string(const std::vector<int>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

void word_classifier_sizes(Check& c) {
  const auto start = Clock::now();
  for (int m = 0; m <= 4; ++m) {
    const TruncSymSet F = word_classifier(m, 4);
    for (int n = 0; n <= 4; ++n) {
      const long want = oracle::ipow(m + 1, n + 1) - m;
      c.expect(static_cast<long>(F.size(n)) == want,
               "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                   std::to_string(F.size(n)) + " != " + std::to_string(want));
    }
  }
  c.expect(seconds_since(start) < 5.0, "took longer than 5 s");
}

void counterexample(Check& c) {
  for (int N = 2; N <= 4; ++N) {
    const Diagram D = counterexample_diagram(N);
    const auto sym = colimit_sym(D).object.size(1);
    const auto grp = colimit_partial(D, PartialCategory::pgrp).object.size(1);
    c.expect(sym == 9, "trunc " + std::to_string(N) + ": Sym pushout has " + std::to_string(sym) +
                           " edges");
    c.expect(grp == 7, "trunc " + std::to_string(N) + ": partial group pushout has " +
                           std::to_string(grp) + " edges");
  }
}

void group_pushout(Check& c) {
  const ColimitResult S = colimit_sym(group_pushout_diagram(3));
  const ReflectResult r = reflect(S.object);
  c.expect(r.report.total_merges() == 0, "reflection merged cells");
  c.expect(is_levelwise_bijective(r.projection, S.object, r.object), "projection not bijective");
}

void fold_formulas(Check& c) {
  for (int n = 0; n <= 4; ++n) {
    for (int w = 1; w <= 4; ++w) {
      const UMap f = fold_power(n, w);
      const std::vector<int> got(f.values().begin(), f.values().end());
      c.expect(f == fold_power_by_composition(n, w) && got == oracle::fold_power(n, w),
               "fold_power(" + std::to_string(n) + "," + std::to_string(w) + ")");
    }
  }
  std::mt19937_64 rng(0xa11ce);
  for (int trial = 0; trial < 500; ++trial) {
    const UMap phi = random_umap(uniform_below(rng, 7), uniform_below(rng, 7), rng);
    const auto fac = factor_through_folds(phi);
    c.expect(fac.alpha.is_order_preserving() && compose(fold_power(fac.n, fac.w), fac.alpha) == phi,
             "factorization of " + phi.to_string());
  }
}

void spine_theorem(Check& c) {
  for (const auto& [name, X] : corpus::spiny(4)) {
    c.expect(is_spiny(X).pass, name + " fails along the standard spines");
    const Report r = is_spiny_random(X, 0x5b1e, 50);
    c.expect(r.pass, name + ": " + r.detail);
  }
  const TruncSymSet P = colimit_sym(counterexample_diagram(4)).object;
  c.expect(!is_spiny(P).pass, "Sym pushout is spiny");
}

void matrix_laws(Check& c) {
  const std::vector<corpus::Entry> objects{{"BS3", nerve(symmetric_group(3), 4)},
                                           {"Bcom(S3)", b_com(symmetric_group(3), 4)}};
  for (const auto& [name, X] : objects) {
    for (int n = 0; n <= 4; ++n) {
      for (CellId x = 0; x < X.size(n); ++x) {
        const std::string at = name + " " + X.name(n, x);
        const MatrixForm M = matrix_form(X, n, x);
        const MatrixForm T = matrix_form(X, n, act(X, flip(n), x));
        c.expect(T == M.opposite().transposed(), at + ": tau_n does not transpose");
        if (2 * n > X.trunc()) continue;
        const MatrixForm L = matrix_form(X, 2 * n, L_of(X, n, x));
        for (int i = 0; i <= 2 * n; ++i) {
          for (int j = 0; j <= 2 * n; ++j) {
            c.expect(L(2 * n - i, 2 * n - j) == L(i, j), at + ": L not centrosymmetric");
            c.expect(L(i, j) == M(std::abs(n - i), std::abs(n - j)), at + ": L entry mismatch");
          }
        }
      }
    }
  }
}

void nilpotent_complexes(Check& c) {
  const FiniteGroup S3 = symmetric_group(3);
  const auto com = b_com(S3, 2).size(2);
  c.expect(com == 18, "b_com(S3) level 2 has " + std::to_string(com));
  c.expect(oracle::commuting_tuples(S3, 2) == 18, "oracle disagrees");
  const auto d8 = b_q(dihedral_group(8), 3, 2).size(2);
  c.expect(d8 == 64, "b_q(D8,3) level 2 has " + std::to_string(d8));
  const TruncSymSet Z = nerve(cyclic_group(4), 3);
  const TruncSymSet C = b_com(cyclic_group(4), 3);
  c.expect(C.level_sizes() == Z.level_sizes() && C.faces() == Z.faces() &&
               C.degeneracies() == Z.degeneracies() && C.swaps() == Z.swaps(),
           "b_com(Z4) differs from nerve(Z4)");
}

void freeness(Check& c) {
  const auto start = Clock::now();
  const std::vector<corpus::Entry> targets{{"F1", word_classifier(1, 3)},
                                           {"Bcom(S3)", b_com(symmetric_group(3), 3)},
                                           {"R(BZ4)", reduce(nerve(cyclic_group(4), 3)).object}};
  for (const auto& [name, X] : targets) {
    for (int m = 0; m <= 2; ++m) {
      const auto homs = enumerate_homs(word_classifier(m, 3), X).size();
      c.expect(homs == X.size(m), name + ", m=" + std::to_string(m) + ": " +
                                      std::to_string(homs) + " maps for " +
                                      std::to_string(X.size(m)) + " cells");
    }
  }
  const auto spiny = corpus::spiny(3);
  for (const auto& [xname, X] : everything(3)) {
    const ReflectResult r = reflect(X);
    for (const auto& [yname, Y] : spiny) {
      const auto direct = enumerate_homs(X, Y);
      const auto through = enumerate_homs(r.object, Y);
      std::set<std::vector<CellTable>> pulled;
      for (const auto& G : through) pulled.insert(compose_maps(G, r.projection).levels);
      std::set<std::vector<CellTable>> all;
      for (const auto& F : direct) all.insert(F.levels);
      c.expect(pulled.size() == through.size() && pulled == all,
               "hom(" + xname + ", " + yname + ") is not hom of the reflection");
    }
  }
  c.expect(seconds_since(start) < 60.0, "took longer than 60 s");
}

void ladder(Check& c) {
  int previous = 0;
  for (int K = 1; K <= 4; ++K) {
    const TruncSymSet X = ladder_example(K, 2);
    const int iterations = reflect(X).report.iterations;
    c.expect(iterations > previous, "K=" + std::to_string(K) + " took " +
                                        std::to_string(iterations) + " iterations");
    previous = iterations;
    Congruence C(X);
    for (int step = 0; step < iterations; ++step) {
      if (step > 0) flat_step(X, C);
      for (int n = 0; n <= 2; ++n) {
        for (const auto& f : oracle::ladder_functions(K, n)) {
          if (oracle::consecutive(f)) continue;
          const std::string s = tuple_string(f);
          const bool merged = C.find(n, X.at(n, "u" + s)) == C.find(n, X.at(n, "v" + s));
          c.expect(merged == oracle::ladder_merged(f, step),
                   "K=" + std::to_string(K) + " step " + std::to_string(step) + " cell " + s);
        }
      }
    }
  }
}

void idempotence(Check& c) {
  for (const auto& [name, X] : everything(3)) {
    const ReflectResult once = reflect(X);
    c.expect(reflect(once.object).report.total_merges() == 0, name + ": second reflection merged");
    c.expect(reduce(once.object).object.level_sizes() ==
                 reflect(reduce(X).object).object.level_sizes(),
             name + ": reduction and reflection do not commute");
  }
}

}  // namespace

int main() {
  criterion(1, "word classifier cardinalities", word_classifier_sizes);
  criterion(2, "counterexample pushout has 7 edges, 9 before reflection", counterexample);
  criterion(3, "pushout along a group needs no merges", group_pushout);
  criterion(4, "fold formulas and factorization", fold_formulas);
  criterion(5, "spine theorem on the corpus", spine_theorem);
  criterion(6, "matrix form laws", matrix_laws);
  criterion(7, "nilpotent complexes", nilpotent_complexes);
  criterion(8, "freeness and universal property of reflection", freeness);
  criterion(9, "ladder fixpoint scaling", ladder);
  criterion(10, "idempotence and commutation with reduction", idempotence);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
