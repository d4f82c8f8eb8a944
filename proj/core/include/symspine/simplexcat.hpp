#pragma once

// Combinatorics of the category of finite ordinals [n] = {0, ..., n} with
// arbitrary functions between them.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symspine {

/// A function [dom] -> [cod], stored as its full value table.
class UMap {
 public:
  UMap(int dom, int cod, std::vector<int> values);

  static UMap identity(int n);
  static UMap constant(int dom, int cod, int value);

  int dom() const noexcept { return dom_; }
  int cod() const noexcept { return cod_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::span<const int> values() const noexcept { return values_; }

  bool is_order_preserving() const noexcept;
  bool is_injective() const noexcept;
  bool is_surjective() const noexcept;
  bool is_identity() const noexcept;

  std::string to_string() const;

  friend bool operator==(const UMap&, const UMap&) = default;

 private:
  int dom_;
  int cod_;
  std::vector<int> values_;
};

/// g o f. Throws InvalidArgument when f.cod() != g.dom().
UMap compose(const UMap& g, const UMap& f);

// Special maps.
UMap flip(int n);                       // tau_n : i -> n - i
UMap fold(int n);                       // chi_n : [2n] -> [n], i -> |n - i|
UMap edge_classifier(int i, int j, int n);  // rho_ij : [1] -> [n]

enum class SpecialKind { tau, chi, rho };

/// Dispatches to flip / fold / edge_classifier. Params are {n} for tau and
/// chi, {i, j, n} for rho.
UMap special_map(SpecialKind kind, std::span<const int> params);

// Generators of the order-preserving maps and the adjacent transpositions.
UMap coface(int n, int i);         // [n-1] -> [n], misses i
UMap codegeneracy(int n, int i);   // [n+1] -> [n], hits i twice
UMap transposition(int n, int k);  // [n] -> [n], exchanges k-1 and k

/// The w-fold composite chi_n o chi_{2n} o ... o chi_{2^{w-1} n}, evaluated by
/// the closed segment formula |(2t+1)n - i| for 2tn <= i <= 2(t+1)n.
UMap fold_power(int n, int w);

/// Same composite built by literally composing fold maps. Used as a cross
/// check for fold_power.
UMap fold_power_by_composition(int n, int w);

struct FoldFactorization {
  UMap alpha;  // order-preserving [m] -> [2^w n]
  int n;
  int w;
};

/// Writes phi : [m] -> [n] as fold_power(n, w) o alpha with alpha
/// order-preserving, alpha(k) = phi(k) + (2k+1)n and w = ceil(log2(m+1)) + 1.
/// For n = 0 every map is constant and the result is (phi, 0, 1).
FoldFactorization factor_through_folds(const UMap& phi);

/// A spanning tree on the vertex set [level]; edges are stored with the
/// smaller endpoint first.
struct Spine {
  int level = 1;
  std::vector<std::pair<int, int>> edges;

  /// True iff the edges form a spanning tree of the complete graph on [level].
  bool is_valid() const;
};

/// Decodes a Pruefer sequence of length n-1 over [n] into a spine on [n],
/// using the smallest-leaf-first convention.
Spine spine_from_pruefer(int n, std::span<const int> seq);

/// The spine {0,1}, {1,2}, ..., {n-1,n}.
Spine standard_spine(int n);

/// Uniformly random spine on [n] (via a random Pruefer sequence).
Spine random_spine(int n, std::mt19937_64& rng);

/// One spine per level 1..trunc.
class SpineSystem {
 public:
  SpineSystem() = default;
  explicit SpineSystem(std::vector<Spine> spines);

  static SpineSystem standard(int trunc);
  static SpineSystem random(int trunc, std::uint64_t seed);

  int max_level() const noexcept { return static_cast<int>(spines_.size()); }
  const Spine& at(int level) const;

 private:
  std::vector<Spine> spines_;
};

/// Uniform draw from {0, ..., bound-1}. Plain modulo reduction keeps seeded
/// runs identical across standard library implementations.
int uniform_below(std::mt19937_64& rng, int bound);

/// Uniformly random function [dom] -> [cod].
UMap random_umap(int dom, int cod, std::mt19937_64& rng);

}  // namespace symspine
