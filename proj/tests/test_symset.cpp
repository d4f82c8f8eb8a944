#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "symspine/algebra.hpp"
#include "symspine/colimits.hpp"
#include "symspine/congruence.hpp"
#include "symspine/error.hpp"
#include "symspine/nerve.hpp"
#include "symspine/spiny.hpp"

using namespace symspine;

namespace {

std::vector<std::size_t> sizes(std::initializer_list<std::size_t> s) { return s; }

// A copy of X with one face entry redirected.
TruncSymSet corrupt_face(const TruncSymSet& X, int n, int i, CellId x, CellId to) {
  std::vector<std::vector<std::string>> names;
  for (int k = 0; k <= X.trunc(); ++k) names.push_back(X.names(k));
  auto faces = X.faces();
  faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][x] = to;
  return TruncSymSet(X.trunc(), names, faces, X.degeneracies(), X.swaps());
}

}  // namespace

TEST_CASE("groups") {
  CHECK(cyclic_group(4).order() == 4);
  CHECK(symmetric_group(3).order() == 6);
  CHECK_FALSE(symmetric_group(3).is_abelian());
  const FiniteGroup D8 = dihedral_group(8);
  CHECK(D8.order() == 8);
  const Element r = *D8.find("r1"), s = *D8.find("s0");
  CHECK(D8.mul(s, r) == D8.mul(D8.inverse(r), s));
  CHECK(group_by_name("Z2xZ2").order() == 4);
  CHECK(group_by_name("Z2xZ2").is_abelian());
  CHECK(group_by_name("1").order() == 1);
  CHECK_THROWS_AS(group_by_name("Q8x"), InvalidArgument);
  // Not associative: a 3-element loop that is not a group.
  CHECK_THROWS_AS(FiniteGroup({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), InvalidArgument);
}

TEST_CASE("groupoids") {
  const FiniteGroupoid C = chaotic_groupoid(3);
  CHECK(C.object_count() == 3);
  CHECK(C.morphism_count() == 9);
  const int f = 0 * 3 + 1, g = 1 * 3 + 2;  // 0>1, 1>2
  CHECK(C.morphism(C.compose(f, g)).name == "0>2");
  CHECK(C.morphism(C.inverse(f)).name == "1>0");
  // Missing composite.
  CHECK_THROWS_AS(FiniteGroupoid({"x", "y"}, {{"1x", 0, 0}, {"1y", 1, 1}, {"a", 0, 1}},
                                 {{{0, 0}, 0}, {{1, 1}, 1}, {{0, 2}, 2}}, {0, 1}),
                  InvalidArgument);
}

TEST_CASE("act on nerves") {
  const TruncSymSet BZ4 = nerve(cyclic_group(4), 3);
  CHECK(BZ4.name(1, act(BZ4, flip(1), BZ4.at(1, "1"))) == "3");
  CHECK(BZ4.name(2, act(BZ4, fold(1), BZ4.at(1, "1"))) == "(3,1)");
  for (CellId x = 0; x < BZ4.size(3); ++x) CHECK(act(BZ4, UMap::identity(3), x) == x);
  CHECK_THROWS_AS(act(BZ4, fold(2), 0), InvalidArgument);
}

TEST_CASE("act agrees with the matrix form of a groupoid nerve") {
  // phi^* x has edges f_{phi(t-1), phi(t)}, recomputed from the groupoid.
  const FiniteGroupoid G = disjoint_union({chaotic_groupoid(2), groupoid_of_group(symmetric_group(3))});
  const TruncSymSet X = nerve(G, 3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + uniform_below(rng, 3);
    const int m = 1 + uniform_below(rng, 3);
    const auto x = static_cast<CellId>(uniform_below(rng, static_cast<int>(X.size(n))));
    const UMap phi = random_umap(m, n, rng);
    // Chain of x from its edges.
    std::vector<int> chain;
    for (int t = 1; t <= n; ++t) {
      const CellId e = act(X, edge_classifier(t - 1, t, n), x);
      for (int k = 0; k < G.morphism_count(); ++k) {
        if (G.morphism(k).name == X.name(1, e)) chain.push_back(k);
      }
    }
    REQUIRE(static_cast<int>(chain.size()) == n);
    auto entry = [&](int i, int j) {
      if (i == j) return G.identity(i == 0 ? G.src(chain[0]) : G.tgt(chain[static_cast<std::size_t>(i - 1)]));
      int f = chain[static_cast<std::size_t>(std::min(i, j))];
      for (int k = std::min(i, j) + 1; k < std::max(i, j); ++k) f = G.compose(f, chain[static_cast<std::size_t>(k)]);
      return i < j ? f : G.inverse(f);
    };
    const CellId y = act(X, phi, x);
    for (int t = 1; t <= m; ++t) {
      const CellId e = act(X, edge_classifier(t - 1, t, m), y);
      CHECK(X.name(1, e) == G.morphism(entry(phi(t - 1), phi(t))).name);
    }
  }
}

TEST_CASE("validate") {
  CHECK(validate(nerve(cyclic_group(2), 3)).pass);
  CHECK(validate(representable(2, 3)).pass);
  CHECK(validate(TruncSymSet::empty(2)).pass);
  CHECK(validate(TruncSymSet::terminal(3)).pass);

  const TruncSymSet BZ2 = nerve(cyclic_group(2), 2);
  const CellId x = BZ2.at(2, "(1,1)");
  const TruncSymSet bad = corrupt_face(BZ2, 2, 0, x, BZ2.face(2, 0, x) ^ 1U);
  const Report r = validate(bad);
  CHECK_FALSE(r.pass);
  CHECK(r.detail.find("violated") != std::string::npos);
  CHECK(!r.witness.empty());
}

TEST_CASE("act is functorial and tau is an anti-involution") {
  std::mt19937_64 rng(5);
  for (const auto& [name, X] : corpus::spiny(3)) {
    CAPTURE(name);
    const int N = X.trunc();
    for (int trial = 0; trial < 500; ++trial) {
      const int a = uniform_below(rng, N + 1), b = uniform_below(rng, N + 1), c = uniform_below(rng, N + 1);
      const UMap phi = random_umap(b, c, rng);
      const UMap psi = random_umap(a, b, rng);
      const auto x = static_cast<CellId>(uniform_below(rng, static_cast<int>(X.size(c))));
      CHECK(act(X, psi, act(X, phi, x)) == act(X, compose(phi, psi), x));
    }
    for (int n = 0; n <= N; ++n) {
      for (CellId x = 0; x < X.size(n); ++x) CHECK(act(X, flip(n), act(X, flip(n), x)) == x);
    }
    for (int trial = 0; trial < 100; ++trial) {
      const int m = uniform_below(rng, N + 1), n = uniform_below(rng, N + 1);
      std::vector<int> v(static_cast<std::size_t>(m) + 1);
      for (auto& e : v) e = uniform_below(rng, n + 1);
      std::sort(v.begin(), v.end());
      const UMap alpha(m, n, v);
      const UMap opposite = compose(flip(n), compose(alpha, flip(m)));
      CHECK(opposite.is_order_preserving());
      const auto x = static_cast<CellId>(uniform_below(rng, static_cast<int>(X.size(n))));
      CHECK(act(X, flip(m), act(X, alpha, x)) == act(X, opposite, act(X, flip(n), x)));
    }
  }
}

TEST_CASE("nerve and representable sizes") {
  CHECK(nerve(cyclic_group(2), 2).level_sizes() == sizes({1, 2, 4}));
  CHECK(nerve(chaotic_groupoid(3), 1).level_sizes() == sizes({3, 9}));
  CHECK(nerve(symmetric_group(3), 2).size(2) == 36);
  CHECK(representable(2, 1).size(1) == 9);
  CHECK(representable(1, 2).size(2) == 8);
  CHECK(representable(0, 3).level_sizes() == sizes({1, 1, 1, 1}));
  const auto Y2 = representable(2, 3);
  const auto C3 = nerve(chaotic_groupoid(3), 3);
  CHECK(Y2.level_sizes() == C3.level_sizes());
  for (int n = 0; n <= 3; ++n) {
    CHECK(Y2.faces()[static_cast<std::size_t>(n)] == C3.faces()[static_cast<std::size_t>(n)]);
    CHECK(Y2.swaps()[static_cast<std::size_t>(n)] == C3.swaps()[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("dagger") {
  const TruncSymSet BZ4 = nerve(cyclic_group(4), 2);
  CHECK(BZ4.name(1, dagger(BZ4, BZ4.at(1, "1"))) == "3");
  for (const auto& [name, X] : corpus::spiny(2)) {
    for (CellId e = 0; e < X.size(1); ++e) CHECK(dagger(X, dagger(X, e)) == e);
    for (CellId v = 0; v < X.size(0); ++v) {
      const CellId id = X.degeneracy(0, 0, v);
      CHECK(dagger(X, id) == id);
    }
  }
  const TruncSymSet F2 = reduce(representable(2, 2)).object;
  const CellId a3 = F2.at(1, "(0,2)");
  CHECK(F2.name(1, dagger(F2, a3)) == "(2,0)");
  CHECK_THROWS_AS(dagger(TruncSymSet::terminal(0), 0), InvalidArgument);
}

TEST_CASE("congruence") {
  const TruncSymSet BZ4 = nerve(cyclic_group(4), 2);
  Congruence C(BZ4);
  CHECK(C.unite(1, 3, 1));
  CHECK_FALSE(C.unite(1, 1, 3));
  CHECK(C.find(1, 3) == 1);
  CHECK(C.class_count(1) == 3);
  CHECK_FALSE(C.is_saturated(BZ4));
  C.saturate(BZ4);
  CHECK(C.is_saturated(BZ4));
  // 1 ~ 3 forces the degeneracies together, but not cells that merely share faces.
  CHECK(C.find(2, BZ4.at(2, "(3,0)")) == C.find(2, BZ4.at(2, "(1,0)")));
  CHECK(C.find(2, BZ4.at(2, "(0,3)")) == C.find(2, BZ4.at(2, "(0,1)")));
  CHECK(C.find(2, BZ4.at(2, "(3,2)")) != C.find(2, BZ4.at(2, "(1,2)")));
}

TEST_CASE("quotients") {
  const TruncSymSet BS3 = nerve(symmetric_group(3), 2);
  SUBCASE("identity congruence") {
    const auto q = quotient(BS3, Congruence(BS3));
    CHECK(q.object.level_sizes() == BS3.level_sizes());
    CHECK(is_levelwise_bijective(q.projection, BS3, q.object));
  }
  SUBCASE("full congruence") {
    Congruence C(BS3);
    for (int n = 0; n <= 2; ++n) {
      for (CellId x = 1; x < BS3.size(n); ++x) C.unite(n, 0, x);
    }
    const auto q = quotient(BS3, C);
    CHECK(q.object.level_sizes() == sizes({1, 1, 1}));
    CHECK(validate(q.object).pass);
  }
  SUBCASE("unsaturated") {
    Congruence C(BS3);
    C.unite(1, 1, 2);
    CHECK_THROWS_AS(quotient(BS3, C), InvalidArgument);
  }
}

TEST_CASE("reduce") {
  const auto r = reduce(representable(2, 3));
  CHECK(r.object.size(1) == 7);
  CHECK(r.object.is_reduced());
  CHECK(validate(r.object).pass);
  CHECK(check_sym_map(r.projection, representable(2, 3), r.object).pass);

  CHECK(reduce(TruncSymSet::empty(2)).object.level_sizes() == sizes({1, 1, 1}));

  const auto again = reduce(r.object);
  CHECK(is_levelwise_bijective(again.projection, r.object, again.object));

  for (const auto& [name, X] : corpus::spiny(3)) {
    CAPTURE(name);
    const auto once = reduce(X).object;
    CHECK(once.is_reduced());
    CHECK(reduce(once).object.level_sizes() == once.level_sizes());
  }
}

TEST_CASE("fully degenerate cells") {
  const TruncSymSet C3 = nerve(chaotic_groupoid(3), 2);
  CHECK(fully_degenerate_cells(C3, 2).size() == 3);
  CHECK(fully_degenerate_cells(C3, 0).size() == 3);
}

TEST_CASE("levelwise colimits") {
  const TruncSymSet BZ2 = nerve(cyclic_group(2), 2);
  SUBCASE("coproduct") {
    const auto c = colimit_sym(coproduct_diagram({"x", "y"}, {BZ2, BZ2}));
    CHECK(c.object.size(1) == 4);
    CHECK(validate(c.object).pass);
    CHECK(is_spiny(c.object).pass);
    for (const auto& leg : c.legs) CHECK(check_sym_map(leg, BZ2, c.object).pass);
    // The fold map out of the coproduct.
    const SymMap fold_map = induced_map(c, {identity_map(BZ2), identity_map(BZ2)}, BZ2);
    CHECK(check_sym_map(fold_map, c.object, BZ2).pass);
    for (std::size_t j = 0; j < 2; ++j) CHECK(compose_maps(fold_map, c.legs[j]) == identity_map(BZ2));
  }
  SUBCASE("coequalizer of equal maps") {
    const auto c = colimit_sym(coequalizer_diagram("s", BZ2, "t", BZ2, identity_map(BZ2), identity_map(BZ2)));
    CHECK(is_levelwise_bijective(c.legs[1], BZ2, c.object));
  }
  SUBCASE("counterexample pushout") {
    const auto c = colimit_sym(counterexample_diagram(2));
    CHECK(c.object.size(1) == 9);
    CHECK(validate(c.object).pass);
  }
  SUBCASE("bad diagrams") {
    Diagram D = coproduct_diagram({"x", "y"}, {BZ2, nerve(cyclic_group(2), 3)});
    CHECK_THROWS_AS(colimit_sym(D), InvalidArgument);
    Diagram P = pushout_diagram("a", BZ2, "b", BZ2, identity_map(BZ2), "c", BZ2, identity_map(BZ2));
    P.arrows[1].map.levels[1][1] = 0;
    CHECK_THROWS_AS(colimit_sym(P), PropertyViolation);
    CHECK_THROWS_AS(diagram_shape_from_string("span"), InvalidArgument);
  }
  SUBCASE("cocone into the terminal object") {
    const auto c = colimit_sym(pushout_diagram("a", TruncSymSet::terminal(2), "b", BZ2,
                                               SymMap{{{0}, {0}, {0}}}, "c", BZ2,
                                               SymMap{{{0}, {0}, {0}}}));
    const SymMap to_terminal{{{0}, {0, 0}, {0, 0, 0, 0}}};
    CHECK(check_sym_map(induced_map(c, {SymMap{{{0}, {0}, {0}}}, to_terminal, to_terminal},
                                    TruncSymSet::terminal(2)),
                        c.object, TruncSymSet::terminal(2))
              .pass);
  }
}

TEST_CASE("products") {
  const TruncSymSet BZ2 = nerve(cyclic_group(2), 2);
  const TruncSymSet P = product_sym(BZ2, BZ2);
  CHECK(P.size(1) == 4);
  CHECK(validate(P).pass);
  CHECK(is_spiny(P).pass);
  const TruncSymSet Q = product_sym(BZ2, TruncSymSet::terminal(2));
  CHECK(Q.level_sizes() == BZ2.level_sizes());
  CHECK(Q.faces() == BZ2.faces());
  CHECK(Q.swaps() == BZ2.swaps());
  CHECK(is_spiny(product_sym(nerve(symmetric_group(3), 3), word_classifier(1, 3))).pass);
  CHECK_THROWS_AS(product_sym(BZ2, nerve(cyclic_group(2), 3)), InvalidArgument);
}

TEST_CASE("sub-objects and chains") {
  const FiniteGroup Z4 = cyclic_group(4);
  const TruncSymSet BZ4 = nerve(Z4, 3);
  // Tuples inside a subgroup, for the subgroups {0} < {0,2} < Z4.
  auto inside = [&](std::set<std::string> allowed) {
    std::vector<std::vector<bool>> keep;
    for (int n = 0; n <= 3; ++n) {
      std::vector<bool> mask;
      for (CellId x = 0; x < BZ4.size(n); ++x) {
        bool ok = true;
        if (n >= 1) {
          for (CellId e : edge_tuple(BZ4, n, x)) ok = ok && allowed.count(BZ4.name(1, e));
        }
        mask.push_back(ok);
      }
      keep.push_back(mask);
    }
    return restrict_to(BZ4, keep);
  };
  const auto A = inside({"0"});
  const auto B = inside({"0", "2"});
  const auto C = inside({"0", "1", "2", "3"});
  CHECK(A.object.level_sizes() == sizes({1, 1, 1, 1}));
  CHECK(B.object.level_sizes() == sizes({1, 2, 4, 8}));
  CHECK(validate(B.object).pass);

  auto between = [](const TruncSymSet& S, const TruncSymSet& T) {
    SymMap F;
    for (int n = 0; n <= S.trunc(); ++n) {
      CellTable t;
      for (const auto& nm : S.names(n)) t.push_back(T.at(n, nm));
      F.levels.push_back(t);
    }
    return F;
  };
  const auto chain = chain_colimit({A.object, B.object, C.object},
                                   {between(A.object, B.object), between(B.object, C.object)});
  CHECK(chain.object.level_sizes() == BZ4.level_sizes());
  CHECK(is_spiny(chain.object).pass);
  CHECK(validate(chain.object).pass);

  std::vector<std::vector<bool>> not_closed{{true}, {true, true, false, false}, {}, {}};
  not_closed[2].assign(BZ4.size(2), false);
  not_closed[3].assign(BZ4.size(3), false);
  not_closed[1] = {true, false, true, false};
  not_closed[2][BZ4.at(2, "(1,1)")] = true;
  CHECK_THROWS_AS(restrict_to(BZ4, not_closed), PropertyViolation);
}
