#pragma once

// Enumeration of maps between finite truncated symmetric sets.

#include <cstddef>
#include <vector>

#include "symspine/symset.hpp"

namespace symspine {

/// check_sym_map, plus an explicit check that F commutes with dagger.
Report is_hom(const SymMap& F, const TruncSymSet& X, const TruncSymSet& Y);

struct HomSearchOptions {
  /// Upper bound on search nodes; exceeding it throws SearchCapExceeded.
  std::size_t node_cap = 1'000'000;
};

/// Default options, with node_cap read from SYMSPINE_SEARCH_CAP when set.
HomSearchOptions default_search_options();

/// All maps X -> Y, sorted by their level-1 table (then higher levels).
///
/// Vertices and edges are assigned by backtracking; each higher cell is then
/// sent to a cell of Y with the image edge tuple. For spiny Y that cell is
/// unique. Non-spiny targets are handled by branching over all candidates,
/// which can be slow.
std::vector<SymMap> enumerate_homs(const TruncSymSet& X, const TruncSymSet& Y,
                                   const HomSearchOptions& options = default_search_options());

/// Checks that F -> F(canonical m-cell) is a bijection from hom(word
/// classifier on m letters, X) onto X_m. Needs X reduced, spiny and trunc >= m.
Report verify_word_classifier(int m, const TruncSymSet& X,
                              const HomSearchOptions& options = default_search_options());

}  // namespace symspine
