#include "symspine/congruence.hpp"

#include <numeric>

#include "symspine/error.hpp"

namespace symspine {

Congruence::Congruence(const TruncSymSet& X)
    : parent_(static_cast<std::size_t>(X.trunc()) + 1),
      class_count_(static_cast<std::size_t>(X.trunc()) + 1),
      merges_(static_cast<std::size_t>(X.trunc()) + 1, 0) {
  for (int n = 0; n <= X.trunc(); ++n) {
    auto& p = parent_[static_cast<std::size_t>(n)];
    p.resize(X.size(n));
    std::iota(p.begin(), p.end(), CellId{0});
    class_count_[static_cast<std::size_t>(n)] = X.size(n);
  }
}

CellId Congruence::find(int level, CellId x) const {
  auto& p = parent_.at(static_cast<std::size_t>(level));
  CellId root = x;
  while (p[root] != root) root = p[root];
  while (p[x] != root) {
    const CellId next = p[x];
    p[x] = root;
    x = next;
  }
  return root;
}

bool Congruence::unite(int level, CellId a, CellId b) {
  CellId ra = find(level, a);
  CellId rb = find(level, b);
  if (ra == rb) return false;
  if (rb < ra) std::swap(ra, rb);
  parent_[static_cast<std::size_t>(level)][rb] = ra;
  --class_count_[static_cast<std::size_t>(level)];
  ++merges_[static_cast<std::size_t>(level)];
  pending_.push_back({level, {a, b}});
  return true;
}

std::size_t Congruence::saturate(const TruncSymSet& X) {
  if (X.trunc() != trunc()) throw InvalidArgument("Congruence::saturate: truncation mismatch");
  std::size_t merged = 0;
  while (!pending_.empty()) {
    const auto [level, pair] = pending_.back();
    pending_.pop_back();
    for (const Generator& g : generators_from(level, X.trunc())) {
      if (unite(g.target_level(), apply(X, g, pair.first), apply(X, g, pair.second))) ++merged;
    }
  }
  return merged;
}

bool Congruence::is_saturated(const TruncSymSet& X) const {
  if (X.trunc() != trunc()) return false;
  for (int n = 0; n <= X.trunc(); ++n) {
    for (CellId x = 0; x < X.size(n); ++x) {
      const CellId r = find(n, x);
      if (r == x) continue;
      for (const Generator& g : generators_from(n, X.trunc())) {
        const int m = g.target_level();
        if (find(m, apply(X, g, x)) != find(m, apply(X, g, r))) return false;
      }
    }
  }
  return true;
}

}  // namespace symspine
