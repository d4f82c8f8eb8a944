#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "symspine/symset.hpp"

namespace symspine {

/// A levelwise equivalence relation on the cells of one TruncSymSet.
///
/// Each class is represented by its least cell index. Every successful
/// unite() is remembered until the next saturate(), which closes the relation
/// under all generator actions (x ~ y implies g x ~ g y).
class Congruence {
 public:
  explicit Congruence(const TruncSymSet& X);

  int trunc() const noexcept { return static_cast<int>(parent_.size()) - 1; }

  /// Least cell in the class of x.
  CellId find(int level, CellId x) const;

  /// Merges the classes of a and b. Returns false if they were already equal.
  bool unite(int level, CellId a, CellId b);

  /// Closes the relation under the action of X. Returns the number of extra
  /// merges performed.
  std::size_t saturate(const TruncSymSet& X);

  bool is_saturated(const TruncSymSet& X) const;

  std::size_t class_count(int level) const {
    return class_count_[static_cast<std::size_t>(level)];
  }
  /// Cumulative number of successful unite() calls per level.
  const std::vector<std::size_t>& merges_per_level() const noexcept { return merges_; }

 private:
  mutable std::vector<std::vector<CellId>> parent_;
  std::vector<std::size_t> class_count_;
  std::vector<std::size_t> merges_;
  std::vector<std::pair<int, std::pair<CellId, CellId>>> pending_;
};

}  // namespace symspine
