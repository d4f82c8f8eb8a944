#pragma once

#include <vector>

#include "symspine/algebra.hpp"
#include "symspine/symset.hpp"

namespace symspine {

/// Nerve of a groupoid, truncated at N. Level 0 holds the objects, level n the
/// composable chains (f_1, ..., f_n) in lexicographic order of morphism
/// indices. A map phi acts through the matrix form: edge t of phi^* x is the
/// composite from vertex phi(t-1) to vertex phi(t), inverted when
/// phi(t-1) > phi(t).
///
/// Level-1 cells are named after morphisms, higher cells "(f1,f2,...)".
TruncSymSet nerve(const FiniteGroupoid& G, int trunc);

/// Nerve of a group: one vertex "*", level n is G^n.
TruncSymSet nerve(const FiniteGroup& G, int trunc);

/// The representable presheaf hom(-, [m]) truncated at N: level n holds all
/// functions [n] -> [m] (named "(f0,f1,...)" in lexicographic order), acting
/// by precomposition.
TruncSymSet representable(int m, int trunc);

/// Index of the function `values` : [n] -> [m] in representable(m, N).
CellId representable_index(int m, std::span<const int> values);

/// The map nerve(G) -> nerve(H) induced by a group homomorphism given as an
/// element table. Throws InvalidArgument if `hom` is not a homomorphism.
SymMap nerve_map(const FiniteGroup& G, const FiniteGroup& H, const std::vector<Element>& hom,
                 int trunc);

}  // namespace symspine
