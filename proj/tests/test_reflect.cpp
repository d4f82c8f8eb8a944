#include <string>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "symspine/error.hpp"
#include "symspine/reflect.hpp"
#include "symspine/spiny.hpp"

using namespace symspine;

namespace {

std::string tuple_string(const std::vector<int>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

std::vector<corpus::Entry> everything(int trunc) {
  auto out = corpus::spiny(trunc);
  for (auto& e : corpus::non_spiny(trunc)) out.push_back(std::move(e));
  return out;
}

}  // namespace

TEST_CASE("edge profiles") {
  const TruncSymSet B = nerve(cyclic_group(3), 3);
  const EdgeProfiles p = edge_profiles(B);
  REQUIRE(p.size() == 4);
  CHECK(p[0][0].empty());
  CHECK(p[1][2].empty());
  for (CellId x = 0; x < B.size(3); ++x) CHECK(p[3][x] == edge_tuple(B, 3, x));
}

TEST_CASE("flat step") {
  SUBCASE("spiny input is untouched") {
    for (const auto& [name, X] : corpus::spiny(3)) {
      CAPTURE(name);
      Congruence C(X);
      const auto merges = flat_step(X, C);
      for (auto m : merges) CHECK(m == 0);
    }
  }
  SUBCASE("counterexample pushout") {
    const TruncSymSet P = corpus::non_spiny(2)[0].object;
    Congruence C(P);
    const auto merges = flat_step(P, C);
    CHECK(merges[2] > 0);
    CHECK(merges[1] == 2);
    CHECK(C.is_saturated(P));
    const TruncSymSet A = quotient(P, C).object;
    CHECK(validate(A).pass);
  }
}

TEST_CASE("reflection of spiny objects is the identity") {
  for (const auto& [name, X] : corpus::spiny(3)) {
    CAPTURE(name);
    const ReflectResult r = reflect(X);
    CHECK(r.report.iterations == 1);
    CHECK(r.report.stabilized);
    CHECK(r.report.total_merges() == 0);
    CHECK_FALSE(r.report.boundary_merges);
    CHECK(is_levelwise_bijective(r.projection, X, r.object));
  }
}

TEST_CASE("reflection produces spiny objects") {
  for (const auto& [name, X] : everything(3)) {
    CAPTURE(name);
    const ReflectResult r = reflect(X);
    CHECK(r.report.stabilized);
    CHECK(validate(r.object).pass);
    CHECK(is_spiny(r.object).pass);
    CHECK(is_spiny_random(r.object, 21, 20).pass);
    CHECK(r.object.is_reduced() == X.is_reduced());
    CHECK(check_sym_map(r.projection, X, r.object).pass);
    for (int n = 0; n <= X.trunc(); ++n) CHECK(r.object.size(n) <= X.size(n));
  }
}

TEST_CASE("reflection is idempotent and commutes with reduction") {
  for (const auto& [name, X] : everything(3)) {
    CAPTURE(name);
    const ReflectResult once = reflect(X);
    CHECK(reflect(once.object).report.total_merges() == 0);
    const auto a = reduce(once.object).object.level_sizes();
    const auto b = reflect(reduce(X).object).object.level_sizes();
    CHECK(a == b);
  }
}

TEST_CASE("ladder") {
  int previous = 0;
  for (int K = 1; K <= 4; ++K) {
    CAPTURE(K);
    const TruncSymSet X = ladder_example(K, 2);
    CHECK(validate(X).pass);
    const ReflectResult r = reflect(X);
    CHECK(r.report.stabilized);
    CHECK(r.report.iterations > previous);
    CHECK(r.report.iterations == K);
    previous = r.report.iterations;

    Congruence C(X);
    for (int step = 0; step <= K; ++step) {
      if (step > 0) flat_step(X, C);
      for (int n = 0; n <= 2; ++n) {
        for (const auto& f : oracle::ladder_functions(K, n)) {
          if (oracle::consecutive(f)) continue;
          const std::string s = tuple_string(f);
          CAPTURE(step);
          CAPTURE(s);
          const bool merged = C.find(n, X.at(n, "u" + s)) == C.find(n, X.at(n, "v" + s));
          CHECK(merged == oracle::ladder_merged(f, step));
        }
      }
    }
  }
}

TEST_CASE("iteration bound") {
  const TruncSymSet X = ladder_example(4, 2);
  const ReflectResult r = reflect(X, 2);
  CHECK_FALSE(r.report.stabilized);
  CHECK(r.report.iterations == 2);
  CHECK(check_sym_map(r.projection, X, r.object).pass);
  CHECK(reflect(X, 4).report.stabilized);
}

TEST_CASE("partial colimits") {
  SUBCASE("counterexample") {
    for (int N = 2; N <= 3; ++N) {
      CAPTURE(N);
      const Diagram D = counterexample_diagram(N);
      CHECK(colimit_sym(D).object.size(1) == 9);
      const PartialColimitResult P = colimit_partial(D, PartialCategory::pgrp);
      CHECK(P.object.size(1) == 7);
      CHECK(P.object.is_reduced());
      CHECK(is_spiny(P.object).pass);
      CHECK(P.report.boundary_merges);
      REQUIRE(P.legs.size() == 3);
      for (std::size_t j = 0; j < 3; ++j) CHECK(check_sym_map(P.legs[j], D.objects[j], P.object).pass);
    }
  }
  SUBCASE("coproduct of free partial groups") {
    const TruncSymSet F1 = word_classifier(1, 2);
    const PartialColimitResult P =
        colimit_partial(coproduct_diagram({"t1", "t2"}, {F1, F1}), PartialCategory::pgrp);
    CHECK(P.object.size(1) == 5);
  }
  SUBCASE("pushout along a group") {
    const Diagram D = group_pushout_diagram(3);
    const ColimitResult S = colimit_sym(D);
    const ReflectResult r = reflect(S.object);
    CHECK(r.report.total_merges() == 0);
    CHECK(r.report.iterations == 1);
    CHECK(is_levelwise_bijective(r.projection, S.object, r.object));
    const PartialColimitResult P = colimit_partial(D, PartialCategory::pgrp);
    CHECK(P.object.level_sizes() == S.object.level_sizes());
  }
  SUBCASE("groupoids") {
    const TruncSymSet C3 = nerve(chaotic_groupoid(3), 2);
    const Diagram D = coproduct_diagram({"a", "b"}, {C3, C3});
    const PartialColimitResult P = colimit_partial(D, PartialCategory::pgpd);
    CHECK(P.object.size(0) == 6);
    CHECK_THROWS_AS(colimit_partial(D, PartialCategory::pgrp), InvalidArgument);
  }
  SUBCASE("non-spiny input") {
    const Diagram D = coproduct_diagram({"L"}, {ladder_example(2, 2)});
    CHECK_THROWS_AS(colimit_partial(D, PartialCategory::pgpd), InvalidArgument);
  }
  SUBCASE("category names") {
    CHECK(partial_category_from_string("pgrp") == PartialCategory::pgrp);
    CHECK(to_string(PartialCategory::pgpd) == "pgpd");
    CHECK_THROWS_AS(partial_category_from_string("grp"), InvalidArgument);
  }
}
