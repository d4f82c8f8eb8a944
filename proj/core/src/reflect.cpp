#include "symspine/reflect.hpp"

#include <map>

#include "symspine/error.hpp"
#include "symspine/spiny.hpp"

namespace symspine {

std::size_t ReflectReport::total_merges() const {
  std::size_t t = 0;
  for (const auto& it : merges) {
    for (auto m : it) t += m;
  }
  return t;
}

EdgeProfiles edge_profiles(const TruncSymSet& X) {
  EdgeProfiles out(static_cast<std::size_t>(X.trunc()) + 1);
  for (int n = 0; n <= X.trunc(); ++n) {
    auto& level = out[static_cast<std::size_t>(n)];
    level.resize(X.size(n));
    if (n < 2) continue;
    for (CellId x = 0; x < X.size(n); ++x) level[x] = edge_tuple(X, n, x);
  }
  return out;
}

std::vector<std::size_t> flat_step(const TruncSymSet& X, const EdgeProfiles& edges,
                                   Congruence& C) {
  const int N = X.trunc();
  const std::vector<std::size_t> before = C.merges_per_level();

  // Group against the classes as they were when the step began.
  std::vector<std::pair<int, std::pair<CellId, CellId>>> pairs;
  for (int n = 2; n <= N; ++n) {
    std::map<std::vector<CellId>, CellId> first;
    for (CellId x = 0; x < X.size(n); ++x) {
      std::vector<CellId> key = edges[static_cast<std::size_t>(n)][x];
      for (auto& e : key) e = C.find(1, e);
      auto [it, fresh] = first.emplace(std::move(key), x);
      if (!fresh && C.find(n, it->second) != C.find(n, x)) pairs.push_back({n, {it->second, x}});
    }
  }
  for (const auto& [n, p] : pairs) C.unite(n, p.first, p.second);
  C.saturate(X);

  std::vector<std::size_t> out(before.size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = C.merges_per_level()[n] - before[n];
  return out;
}

std::vector<std::size_t> flat_step(const TruncSymSet& X, Congruence& C) {
  return flat_step(X, edge_profiles(X), C);
}

ReflectResult reflect(const TruncSymSet& X, int max_iters) {
  if (max_iters <= 0) max_iters = static_cast<int>(X.total_cells()) + 1;
  const EdgeProfiles edges = edge_profiles(X);
  Congruence C(X);
  ReflectReport report;
  while (report.iterations < max_iters) {
    ++report.iterations;
    auto merged = flat_step(X, edges, C);
    std::size_t total = 0;
    for (auto m : merged) total += m;
    report.merges.push_back(std::move(merged));
    if (total == 0) {
      report.stabilized = true;
      break;
    }
  }
  const auto top = static_cast<std::size_t>(X.trunc());
  const std::size_t k = report.merges.size();
  for (std::size_t it = k >= 2 ? k - 2 : 0; it < k; ++it) {
    if (report.merges[it][top] > 0) report.boundary_merges = true;
  }
  auto q = quotient(X, C);
  return {std::move(q.object), std::move(q.projection), std::move(report)};
}

std::string to_string(PartialCategory c) { return c == PartialCategory::pgpd ? "pgpd" : "pgrp"; }

PartialCategory partial_category_from_string(const std::string& s) {
  if (s == "pgpd") return PartialCategory::pgpd;
  if (s == "pgrp") return PartialCategory::pgrp;
  throw InvalidArgument("unknown category '" + s + "'");
}

PartialColimitResult colimit_partial(const Diagram& D, PartialCategory category) {
  for (std::size_t j = 0; j < D.objects.size(); ++j) {
    if (Report r = is_spiny(D.objects[j]); !r.pass) {
      throw InvalidArgument("colimit: object '" + D.object_names[j] + "' is not spiny (" +
                            r.witness + " at level " + std::to_string(r.level) + ")");
    }
    if (category == PartialCategory::pgrp && !D.objects[j].is_reduced()) {
      throw InvalidArgument("colimit: object '" + D.object_names[j] + "' is not reduced");
    }
  }
  ColimitResult sym = colimit_sym(D);
  TruncSymSet base = std::move(sym.object);
  std::vector<SymMap> legs = std::move(sym.legs);
  if (category == PartialCategory::pgrp) {
    auto r = reduce(base);
    for (auto& leg : legs) leg = compose_maps(r.projection, leg);
    base = std::move(r.object);
  }
  ReflectResult refl = reflect(base);
  for (auto& leg : legs) leg = compose_maps(refl.projection, leg);
  return {std::move(refl.object), std::move(legs), std::move(refl.report)};
}

}  // namespace symspine
