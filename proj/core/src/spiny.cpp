#include "symspine/spiny.hpp"

#include <map>
#include <random>

#include "symspine/error.hpp"

namespace symspine {

namespace {

std::string pair_witness(const TruncSymSet& X, int level, CellId a, CellId b) {
  return "[" + X.name(level, a) + "|" + X.name(level, b) + "]";
}

std::string tuple_name(const SimplicialData& S, int level, const std::vector<CellId>& cells) {
  std::string s = "(";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += S.name(level, cells[i]);
  }
  return s + ")";
}

// Per level, the spine edges of every cell; checks injectivity.
Report injective_along(const TruncSymSet& X, const SpineSystem& spines, const std::string& label) {
  for (int n = 1; n <= X.trunc(); ++n) {
    const Spine& spine = spines.at(n);
    std::map<std::vector<CellId>, CellId> seen;
    for (CellId x = 0; x < X.size(n); ++x) {
      auto [it, fresh] = seen.emplace(spine_edges(X, spine, x), x);
      if (!fresh) {
        return Report::fail(n, pair_witness(X, n, it->second, x),
                            "cells share their edges along the " + label + " spine");
      }
    }
  }
  return Report::ok();
}

}  // namespace

std::vector<CellId> edge_tuple(const TruncSymSet& X, int level, CellId x) {
  if (level < 1) throw InvalidArgument("edge_tuple: level must be at least 1");
  std::vector<CellId> out;
  out.reserve(static_cast<std::size_t>(level));
  for (int i = 1; i <= level; ++i) out.push_back(act(X, edge_classifier(i - 1, i, level), x));
  return out;
}

std::vector<CellId> spine_edges(const TruncSymSet& X, const Spine& spine, CellId x) {
  std::vector<CellId> out;
  out.reserve(spine.edges.size());
  for (const auto& [i, j] : spine.edges) out.push_back(act(X, edge_classifier(i, j, spine.level), x));
  return out;
}

Report is_spiny(const TruncSymSet& X, const SpineSystem& spines) {
  if (spines.max_level() < X.trunc()) {
    throw InvalidArgument("is_spiny: spine system does not reach the truncation");
  }
  return injective_along(X, spines, "chosen");
}

Report is_spiny(const TruncSymSet& X) {
  return injective_along(X, SpineSystem::standard(X.trunc()), "standard");
}

Report is_spiny_random(const TruncSymSet& X, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  for (int c = 0; c < count; ++c) {
    const SpineSystem spines = SpineSystem::random(X.trunc(), rng());
    Report r = injective_along(X, spines, "random");
    if (!r.pass) {
      r.detail += " (system " + std::to_string(c) + ")";
      return r;
    }
  }
  return Report::ok();
}

MatrixForm MatrixForm::transposed() const {
  MatrixForm t = *this;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) t.entries[i][j] = entries[j][i];
  }
  return t;
}

MatrixForm MatrixForm::opposite() const {
  MatrixForm t = *this;
  const auto n = entries.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) t.entries[i][j] = entries[n - j][n - i];
  }
  return t;
}

MatrixForm matrix_form(const TruncSymSet& X, int level, CellId x) {
  if (X.trunc() < std::max(level, 1)) throw InvalidArgument("matrix_form: truncation too small");
  MatrixForm M;
  M.level = level;
  const auto side = static_cast<std::size_t>(level) + 1;
  M.entries.assign(side, std::vector<CellId>(side, 0));
  for (int i = 0; i <= level; ++i) {
    for (int j = 0; j <= level; ++j) {
      M.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          act(X, edge_classifier(i, j, level), x);
    }
  }
  return M;
}

Report check_matrix_form(const TruncSymSet& X, const MatrixForm& M) {
  for (int i = 0; i <= M.level; ++i) {
    const CellId diag = M(i, i);
    if (X.degeneracy(0, 0, X.face(1, 0, diag)) != diag) {
      return Report::fail(1, X.name(1, diag),
                          "diagonal entry " + std::to_string(i) + " is not degenerate");
    }
    for (int j = 0; j <= M.level; ++j) {
      if (M(j, i) != dagger(X, M(i, j))) {
        return Report::fail(1, X.name(1, M(i, j)),
                            "entry (" + std::to_string(j) + "," + std::to_string(i) +
                                ") is not the dagger of its transpose");
      }
    }
  }
  return Report::ok();
}

CellId L_of(const TruncSymSet& X, int level, CellId x) {
  if (2 * level > X.trunc()) throw InvalidArgument("L_of: 2n exceeds the truncation");
  return act(X, fold(level), x);
}

Report is_groupoid_nerve(const TruncSymSet& X) {
  if (Report r = is_spiny(X); !r.pass) {
    return Report::fail(r.level, r.witness, "not applicable: input is not spiny");
  }
  if (X.trunc() < 2) return Report::ok();
  const auto vertices = X.size(0);
  // Edges by source vertex. Source of e is d_1 e, target d_0 e.
  std::vector<std::vector<CellId>> out(vertices);
  for (CellId e = 0; e < X.size(1); ++e) out[X.face(1, 1, e)].push_back(e);

  std::vector<std::size_t> paths(vertices, 1);  // paths of length 0 ending at v
  for (int n = 1; n <= X.trunc(); ++n) {
    std::vector<std::size_t> next(vertices, 0);
    for (CellId e = 0; e < X.size(1); ++e) next[X.face(1, 0, e)] += paths[X.face(1, 1, e)];
    paths = std::move(next);
    std::size_t total = 0;
    for (auto p : paths) total += p;
    if (n == 1 || total == X.size(n)) continue;

    // Spininess makes the count an upper bound; find a tuple with no cell.
    std::map<std::vector<CellId>, CellId> have;
    for (CellId x = 0; x < X.size(n); ++x) have.emplace(edge_tuple(X, n, x), x);
    std::vector<CellId> chain;
    std::optional<std::vector<CellId>> missing;
    auto search = [&](auto&& self, CellId v) -> void {
      if (missing) return;
      if (static_cast<int>(chain.size()) == n) {
        if (!have.count(chain)) missing = chain;
        return;
      }
      for (CellId e : out[v]) {
        chain.push_back(e);
        self(self, X.face(1, 0, e));
        chain.pop_back();
        if (missing) return;
      }
    };
    for (CellId v = 0; v < vertices && !missing; ++v) search(search, v);
    return Report::fail(n, missing ? tuple_name(X.simplicial(), 1, *missing) : std::string{},
                        std::to_string(total) + " composable tuples but " +
                            std::to_string(X.size(n)) + " cells");
  }
  return Report::ok();
}

TruncSimpSet forget_swaps(const TruncSymSet& X) {
  TruncSimpSet S{X.simplicial(), std::nullopt};
  if (X.trunc() >= 1) S.involution = X.swaps()[1][0];
  return S;
}

TruncSymSet symmetrize_edgy(const TruncSimpSet& S) {
  const SimplicialData& D = S.data;
  const int N = D.trunc();
  const auto levels = static_cast<std::size_t>(N) + 1;
  std::vector<std::vector<std::string>> names(levels);
  for (int n = 0; n <= N; ++n) names[static_cast<std::size_t>(n)] = D.names(n);
  std::vector<std::vector<CellTable>> swaps(levels);
  if (N == 0) {
    return TruncSymSet(N, std::move(names), D.faces(), D.degeneracies(), std::move(swaps));
  }
  if (!S.involution) throw PropertyViolation("symmetrize_edgy: an edge involution is required");
  const CellTable& inv = *S.involution;
  if (inv.size() != D.size(1)) throw PropertyViolation("symmetrize_edgy: involution has wrong size");
  for (CellId e = 0; e < D.size(1); ++e) {
    const std::string& nm = D.name(1, e);
    if (inv[e] >= D.size(1) || inv[inv[e]] != e) {
      throw PropertyViolation("symmetrize_edgy: involution is not an involution at '" + nm + "'");
    }
    if (D.face(1, 0, inv[e]) != D.face(1, 1, e) || D.face(1, 1, inv[e]) != D.face(1, 0, e)) {
      throw PropertyViolation("symmetrize_edgy: involution does not reverse the edge '" + nm + "'");
    }
  }
  for (CellId v = 0; v < D.size(0); ++v) {
    const CellId id = D.degeneracy(0, 0, v);
    if (inv[id] != id) {
      throw PropertyViolation("symmetrize_edgy: involution moves the degenerate edge '" +
                              D.name(1, id) + "'");
    }
  }

  // Full matrix of x from monotone edge evaluations and the involution.
  auto matrix = [&](int n, CellId x) {
    const auto side = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<CellId>> m(side, std::vector<CellId>(side, 0));
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        const CellId f = D.pull_monotone(edge_classifier(i, j, n), x);
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f;
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = inv[f];
      }
    }
    return m;
  };

  for (int n = 1; n <= N; ++n) {
    std::map<std::vector<CellId>, CellId> by_edges;
    std::vector<std::vector<std::vector<CellId>>> mats;
    for (CellId x = 0; x < D.size(n); ++x) {
      mats.push_back(matrix(n, x));
      std::vector<CellId> edges;
      for (int i = 1; i <= n; ++i) {
        edges.push_back(mats.back()[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i)]);
      }
      auto [it, fresh] = by_edges.emplace(std::move(edges), x);
      if (!fresh) {
        throw PropertyViolation("symmetrize_edgy: not edgy at level " + std::to_string(n) +
                                ", cells '" + D.name(n, it->second) + "' and '" + D.name(n, x) +
                                "' share their edges");
      }
    }
    for (int k = 1; k <= n; ++k) {
      const UMap t = transposition(n, k);
      CellTable table(D.size(n));
      for (CellId x = 0; x < D.size(n); ++x) {
        const auto& m = mats[x];
        auto want = [&](int i, int j) {
          return m[static_cast<std::size_t>(t(i))][static_cast<std::size_t>(t(j))];
        };
        std::vector<CellId> edges;
        for (int i = 1; i <= n; ++i) edges.push_back(want(i - 1, i));
        auto it = by_edges.find(edges);
        if (it == by_edges.end()) {
          throw PropertyViolation("symmetrize_edgy: no cell for t_" + std::to_string(k) +
                                  " applied to '" + D.name(n, x) + "' at level " +
                                  std::to_string(n));
        }
        const auto& got = mats[it->second];
        for (int i = 0; i <= n; ++i) {
          for (int j = 0; j <= n; ++j) {
            if (got[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != want(i, j)) {
              throw PropertyViolation("symmetrize_edgy: cell '" + D.name(n, it->second) +
                                      "' has the right edges for t_" + std::to_string(k) +
                                      " on '" + D.name(n, x) + "' but the wrong matrix form");
            }
          }
        }
        table[x] = it->second;
      }
      swaps[static_cast<std::size_t>(n)].push_back(std::move(table));
    }
  }
  TruncSymSet X(N, std::move(names), D.faces(), D.degeneracies(), std::move(swaps));
  if (Report r = validate(X); !r.pass) {
    throw PropertyViolation("symmetrize_edgy: result violates " + r.detail + " at " + r.witness);
  }
  return X;
}

}  // namespace symspine
