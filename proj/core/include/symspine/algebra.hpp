#pragma once

// Multiplication-table presentations of finite groups and groupoids.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symspine {

using Element = int;

class FiniteGroup {
 public:
  /// mul[a][b] is the product a*b. Checks closure, associativity, the unit
  /// laws and two-sided inverses; throws InvalidArgument otherwise.
  FiniteGroup(std::vector<std::string> elements, Element unit,
              std::vector<std::vector<Element>> mul);

  int order() const noexcept { return static_cast<int>(names_.size()); }
  Element unit() const noexcept { return unit_; }
  Element mul(Element a, Element b) const {
    return mul_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  Element inverse(Element a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// a^{-1} b^{-1} a b
  Element commutator(Element a, Element b) const;

  const std::string& name(Element a) const { return names_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(const std::string& name) const;
  const std::vector<std::vector<Element>>& table() const noexcept { return mul_; }

  bool is_abelian() const;

 private:
  std::vector<std::string> names_;
  Element unit_;
  std::vector<std::vector<Element>> mul_;
  std::vector<Element> inv_;
};

/// Z/n with elements named "0".."n-1".
FiniteGroup cyclic_group(int n);
/// Symmetric group on {1..n} (n <= 6); elements are named by their one-line
/// notation, e.g. "213", identity first.
FiniteGroup symmetric_group(int n);
/// Dihedral group of the given (even) order 2k: rotations "r0".."r{k-1}",
/// reflections "s0".."s{k-1}".
FiniteGroup dihedral_group(int order);
/// Elements named "(a,b)".
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);

/// Parses names like "Z4", "S3", "D8", "Z2xZ2", "1" (trivial group).
FiniteGroup group_by_name(const std::string& spec);

struct Morphism {
  std::string name;
  int src;
  int tgt;
};

class FiniteGroupoid {
 public:
  /// comp maps (f, g) with tgt(f) == src(g) to the composite "g after f".
  /// identities[x] is the identity morphism of object x. Checks totality on
  /// composable pairs, associativity, unit laws and invertibility.
  FiniteGroupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                 std::map<std::pair<int, int>, int> comp, std::vector<int> identities);

  int object_count() const noexcept { return static_cast<int>(objects_.size()); }
  int morphism_count() const noexcept { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const Morphism& morphism(int f) const { return morphisms_.at(static_cast<std::size_t>(f)); }
  const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
  int src(int f) const { return morphism(f).src; }
  int tgt(int f) const { return morphism(f).tgt; }
  int identity(int x) const { return identities_.at(static_cast<std::size_t>(x)); }
  const std::vector<int>& identities() const noexcept { return identities_; }
  /// g after f; requires tgt(f) == src(g).
  int compose(int f, int g) const;
  int inverse(int f) const { return inv_.at(static_cast<std::size_t>(f)); }
  const std::map<std::pair<int, int>, int>& composition_table() const noexcept { return comp_; }

  /// Morphisms leaving object x, in index order.
  const std::vector<int>& out_of(int x) const { return out_.at(static_cast<std::size_t>(x)); }

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::map<std::pair<int, int>, int> comp_;
  std::vector<int> identities_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> out_;
};

/// A group as a one-object groupoid (object "*", morphisms named as elements).
FiniteGroupoid groupoid_of_group(const FiniteGroup& G);
/// Unique morphism between any two of `objects` objects; morphism i->j is
/// named "i>j".
FiniteGroupoid chaotic_groupoid(int objects);
/// Disjoint union; object and morphism names are prefixed with "k:".
FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts);

}  // namespace symspine
