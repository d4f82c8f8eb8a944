#pragma once

// Edge tuples, spininess, matrix forms and the passage between edgy
// simplicial data and symmetric sets.

#include <cstdint>
#include <optional>
#include <vector>

#include "symspine/symset.hpp"

namespace symspine {

/// (rho_{0,1}^* x, ..., rho_{n-1,n}^* x) for x at level n >= 1.
std::vector<CellId> edge_tuple(const TruncSymSet& X, int level, CellId x);

/// Edges of x along the edges {i,j} of a spine, in spine order.
std::vector<CellId> spine_edges(const TruncSymSet& X, const Spine& spine, CellId x);

/// Injectivity of x -> spine_edges(x) at every level 1..trunc. On failure the
/// witness is the first colliding pair "[x|y]".
Report is_spiny(const TruncSymSet& X, const SpineSystem& spines);
Report is_spiny(const TruncSymSet& X);
/// `count` independent random spine systems drawn from `seed`; fails on the
/// first system along which X is not injective.
Report is_spiny_random(const TruncSymSet& X, std::uint64_t seed, int count);

/// entries[i][j] = rho_{ij}^* x.
struct MatrixForm {
  int level = 0;
  std::vector<std::vector<CellId>> entries;

  CellId operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  MatrixForm transposed() const;
  /// The matrix of the same cell read in the opposite symmetric set:
  /// entries[i][j] becomes entries[n-j][n-i]. Its transpose is the matrix
  /// form of tau_n^* x.
  MatrixForm opposite() const;
  friend bool operator==(const MatrixForm&, const MatrixForm&) = default;
};

MatrixForm matrix_form(const TruncSymSet& X, int level, CellId x);

/// Skew-symmetry under dagger and degenerate diagonal.
Report check_matrix_form(const TruncSymSet& X, const MatrixForm& M);

/// chi_n^* x, a cell at level 2n. Throws InvalidArgument when 2n > trunc.
CellId L_of(const TruncSymSet& X, int level, CellId x);

/// Whether X_n -> X_1 x_{X_0} ... x_{X_0} X_1 is a bijection for 1 <= n <= trunc.
/// A non-spiny X fails with detail "not applicable". The witness of a missing
/// composable tuple is written "(e1,e2,...)".
Report is_groupoid_nerve(const TruncSymSet& X);

/// Face/degeneracy data with an optional involution on the edges.
struct TruncSimpSet {
  SimplicialData data;
  std::optional<CellTable> involution;
};

/// The underlying simplicial data; the involution is dagger.
TruncSimpSet forget_swaps(const TruncSymSet& X);

/// Rebuilds the swap tables of an edgy simplicial set from its edge
/// involution: t_k^* x is the cell whose matrix form is x's with rows and
/// columns k-1, k exchanged. Throws PropertyViolation when the input is not
/// edgy, the involution is inconsistent, or some such cell is missing.
TruncSymSet symmetrize_edgy(const TruncSimpSet& S);

}  // namespace symspine
