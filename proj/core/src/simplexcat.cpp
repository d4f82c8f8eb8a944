#include "symspine/simplexcat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "symspine/error.hpp"

namespace symspine {

UMap::UMap(int dom, int cod, std::vector<int> values)
    : dom_(dom), cod_(cod), values_(std::move(values)) {
  if (dom < 0 || cod < 0) {
    throw InvalidArgument("UMap: levels must be non-negative");
  }
  if (values_.size() != static_cast<std::size_t>(dom) + 1) {
    throw InvalidArgument("UMap: value table has " + std::to_string(values_.size()) +
                          " entries, expected " + std::to_string(dom + 1));
  }
  for (int v : values_) {
    if (v < 0 || v > cod) {
      throw InvalidArgument("UMap: value " + std::to_string(v) + " outside [" +
                            std::to_string(cod) + "]");
    }
  }
}

UMap UMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  std::iota(v.begin(), v.end(), 0);
  return UMap(n, n, std::move(v));
}

UMap UMap::constant(int dom, int cod, int value) {
  return UMap(dom, cod, std::vector<int>(static_cast<std::size_t>(dom) + 1, value));
}

bool UMap::is_order_preserving() const noexcept {
  return std::is_sorted(values_.begin(), values_.end());
}

bool UMap::is_injective() const noexcept {
  std::vector<bool> seen(static_cast<std::size_t>(cod_) + 1, false);
  for (int v : values_) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool UMap::is_surjective() const noexcept {
  std::vector<bool> seen(static_cast<std::size_t>(cod_) + 1, false);
  for (int v : values_) seen[static_cast<std::size_t>(v)] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool UMap::is_identity() const noexcept {
  if (dom_ != cod_) return false;
  for (int i = 0; i <= dom_; ++i) {
    if (values_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::string UMap::to_string() const {
  std::ostringstream os;
  os << '[' << dom_ << "]->[" << cod_ << "](";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  os << ')';
  return os.str();
}

UMap compose(const UMap& g, const UMap& f) {
  if (f.cod() != g.dom()) {
    throw InvalidArgument("compose: " + f.to_string() + " does not compose with " +
                          g.to_string());
  }
  std::vector<int> v(static_cast<std::size_t>(f.dom()) + 1);
  for (int i = 0; i <= f.dom(); ++i) v[static_cast<std::size_t>(i)] = g(f(i));
  return UMap(f.dom(), g.cod(), std::move(v));
}

UMap flip(int n) {
  if (n < 0) throw InvalidArgument("flip: negative level");
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return UMap(n, n, std::move(v));
}

UMap fold(int n) {
  if (n < 0) throw InvalidArgument("fold: negative level");
  std::vector<int> v(static_cast<std::size_t>(2 * n) + 1);
  for (int i = 0; i <= 2 * n; ++i) v[static_cast<std::size_t>(i)] = std::abs(n - i);
  return UMap(2 * n, n, std::move(v));
}

UMap edge_classifier(int i, int j, int n) {
  if (n < 0 || i < 0 || j < 0 || i > n || j > n) {
    throw InvalidArgument("edge_classifier: indices out of range");
  }
  return UMap(1, n, {i, j});
}

UMap special_map(SpecialKind kind, std::span<const int> params) {
  switch (kind) {
    case SpecialKind::tau:
      if (params.size() != 1) throw InvalidArgument("special_map(tau): expects {n}");
      return flip(params[0]);
    case SpecialKind::chi:
      if (params.size() != 1) throw InvalidArgument("special_map(chi): expects {n}");
      return fold(params[0]);
    case SpecialKind::rho:
      if (params.size() != 3) throw InvalidArgument("special_map(rho): expects {i, j, n}");
      return edge_classifier(params[0], params[1], params[2]);
  }
  throw InvalidArgument("special_map: unknown kind");
}

UMap coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw InvalidArgument("coface: index out of range");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k < i ? k : k + 1;
  return UMap(n - 1, n, std::move(v));
}

UMap codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw InvalidArgument("codegeneracy: index out of range");
  std::vector<int> v(static_cast<std::size_t>(n) + 2);
  for (int k = 0; k <= n + 1; ++k) v[static_cast<std::size_t>(k)] = k <= i ? k : k - 1;
  return UMap(n + 1, n, std::move(v));
}

UMap transposition(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw InvalidArgument("transposition: index out of range");
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[static_cast<std::size_t>(k - 1)], v[static_cast<std::size_t>(k)]);
  return UMap(n, n, std::move(v));
}

UMap fold_power(int n, int w) {
  if (n < 0 || w < 1) throw InvalidArgument("fold_power: need n >= 0 and w >= 1");
  const int dom = (1 << w) * n;
  std::vector<int> v(static_cast<std::size_t>(dom) + 1, 0);
  if (n == 0) return UMap(0, 0, std::move(v));
  const int last_segment = (1 << (w - 1)) - 1;
  for (int i = 0; i <= dom; ++i) {
    const int t = std::min(i / (2 * n), last_segment);
    v[static_cast<std::size_t>(i)] = std::abs((2 * t + 1) * n - i);
  }
  return UMap(dom, n, std::move(v));
}

UMap fold_power_by_composition(int n, int w) {
  if (n < 0 || w < 1) throw InvalidArgument("fold_power: need n >= 0 and w >= 1");
  UMap acc = fold(n);
  for (int s = 1; s < w; ++s) acc = compose(acc, fold((1 << s) * n));
  return acc;
}

FoldFactorization factor_through_folds(const UMap& phi) {
  const int m = phi.dom();
  const int n = phi.cod();
  if (n == 0) return {phi, 0, 1};
  int w = 1;
  while ((1 << (w - 1)) < m + 1) ++w;  // w = ceil(log2(m+1)) + 1
  std::vector<int> alpha(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) alpha[static_cast<std::size_t>(k)] = phi(k) + (2 * k + 1) * n;
  return {UMap(m, (1 << w) * n, std::move(alpha)), n, w};
}

bool Spine::is_valid() const {
  if (level < 1 || edges.size() != static_cast<std::size_t>(level)) return false;
  std::vector<int> parent(static_cast<std::size_t>(level) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a > level || b > level || a == b) return false;
    const int ra = root(a);
    const int rb = root(b);
    if (ra == rb) return false;  // cycle
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  // n acyclic edges on n+1 vertices form a spanning tree.
  return true;
}

Spine spine_from_pruefer(int n, std::span<const int> seq) {
  if (n < 1) throw InvalidArgument("spine_from_pruefer: level must be >= 1");
  if (seq.size() != static_cast<std::size_t>(n - 1)) {
    throw InvalidArgument("spine_from_pruefer: sequence must have length " +
                          std::to_string(n - 1));
  }
  for (int v : seq) {
    if (v < 0 || v > n) throw InvalidArgument("spine_from_pruefer: label out of range");
  }
  const std::size_t vertices = static_cast<std::size_t>(n) + 1;
  std::vector<int> degree(vertices, 1);
  for (int v : seq) ++degree[static_cast<std::size_t>(v)];

  std::set<int> leaves;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (degree[v] == 1) leaves.insert(static_cast<int>(v));
  }
  Spine spine{n, {}};
  for (int v : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    spine.edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  spine.edges.emplace_back(a, b);
  return spine;
}

Spine standard_spine(int n) {
  if (n < 1) throw InvalidArgument("standard_spine: level must be >= 1");
  Spine s{n, {}};
  for (int i = 1; i <= n; ++i) s.edges.emplace_back(i - 1, i);
  return s;
}

int uniform_below(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

UMap random_umap(int dom, int cod, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(dom) + 1);
  for (auto& x : v) x = uniform_below(rng, cod + 1);
  return UMap(dom, cod, std::move(v));
}

Spine random_spine(int n, std::mt19937_64& rng) {
  std::vector<int> seq(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (auto& x : seq) x = uniform_below(rng, n + 1);
  return spine_from_pruefer(n, seq);
}

SpineSystem::SpineSystem(std::vector<Spine> spines) : spines_(std::move(spines)) {
  for (std::size_t i = 0; i < spines_.size(); ++i) {
    if (spines_[i].level != static_cast<int>(i) + 1 || !spines_[i].is_valid()) {
      throw InvalidArgument("SpineSystem: entry " + std::to_string(i) +
                            " is not a valid spine on [" + std::to_string(i + 1) + "]");
    }
  }
}

SpineSystem SpineSystem::standard(int trunc) {
  std::vector<Spine> s;
  for (int n = 1; n <= trunc; ++n) s.push_back(standard_spine(n));
  return SpineSystem(std::move(s));
}

SpineSystem SpineSystem::random(int trunc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Spine> s;
  for (int n = 1; n <= trunc; ++n) s.push_back(random_spine(n, rng));
  return SpineSystem(std::move(s));
}

const Spine& SpineSystem::at(int level) const {
  if (level < 1 || level > max_level()) {
    throw InvalidArgument("SpineSystem: no spine at level " + std::to_string(level));
  }
  return spines_[static_cast<std::size_t>(level - 1)];
}

}  // namespace symspine
