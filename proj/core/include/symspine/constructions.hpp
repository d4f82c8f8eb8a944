#pragma once

// Partial groups built from group and groupoid data.

#include <vector>

#include "symspine/algebra.hpp"
#include "symspine/colimits.hpp"
#include "symspine/symset.hpp"

namespace symspine {

/// reduce(representable(m, N)): the free partial group on a word of length m.
TruncSymSet word_classifier(int m, int trunc);

/// The map Y^m -> Y^n, f -> iota o f, for iota : [m] -> [n].
SymMap representable_map(const UMap& iota, int trunc);

/// The induced map between word classifiers.
SymMap word_classifier_map(const UMap& iota, int trunc);

/// Subgroup generated by `gens`, as a sorted element list.
std::vector<Element> generated_subgroup(const FiniteGroup& G, const std::vector<Element>& gens);

/// Subgroup generated by all [a, b] with a in A, b in B.
std::vector<Element> commutator_subgroup(const FiniteGroup& G, const std::vector<Element>& A,
                                         const std::vector<Element>& B);

/// Gamma^1 = <H>, Gamma^{i+1} = [Gamma^i, <H>], stored until the first repeat.
struct LowerCentralSeries {
  std::vector<std::vector<Element>> terms;

  /// Gamma^i for i >= 1; past the stored terms the series is constant.
  const std::vector<Element>& term(int i) const;
  bool is_nilpotent() const { return terms.back().size() == 1; }
};

LowerCentralSeries lower_central_series(const FiniteGroup& G, const std::vector<Element>& H);

/// The sub-symmetric-set of nerve(G, N) on tuples (g_1, ..., g_n) with
/// Gamma^q(<g_1, ..., g_n>) trivial.
TruncSymSet b_q(const FiniteGroup& G, int q, int trunc);
/// Commuting tuples, b_q(G, 2, N).
TruncSymSet b_com(const FiniteGroup& G, int trunc);

/// reduce(nerve(Gpd, N)).
TruncSymSet groupoid_to_partial_group(const FiniteGroupoid& Gpd, int trunc);

/// Cells (a, f) with a in {u, v} and f : [n] -> {0..K} landing in some
/// {0, k, k+1}; u and v are identified when the image of f lies in two
/// consecutive numbers. Consecutive cells are named "(f0,...)", the others
/// "u(f0,...)" and "v(f0,...)".
TruncSymSet ladder_example(int cutoff, int trunc);

/// Two copies of the free partial group on one letter glued to two copies of
/// the free partial group on a word of length two: t1 goes to the first
/// letter and t2 to the second, in both. Objects are named "T", "A", "B".
Diagram counterexample_diagram(int trunc);

/// Nerves of Z2 -> Z4 (1 -> 2) and Z2 -> Z2xZ2 (1 -> (1,0)).
Diagram group_pushout_diagram(int trunc);

}  // namespace symspine
