#pragma once

// N-truncated symmetric sets: presheaves on the finite ordinals [0..N] with
// all functions, presented by face, degeneracy and adjacent-swap tables.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "symspine/simplexcat.hpp"

namespace symspine {

using CellId = std::uint32_t;
using CellTable = std::vector<CellId>;

/// Pass/fail outcome of a structural check. `level` is -1 when the check is
/// not tied to a level; `witness` names the offending cells.
struct Report {
  bool pass = true;
  int level = -1;
  std::string witness;
  std::string detail;

  static Report ok() { return {}; }
  static Report fail(int level, std::string witness, std::string detail) {
    return {false, level, std::move(witness), std::move(detail)};
  }
  explicit operator bool() const noexcept { return pass; }
};

/// The face/degeneracy part shared by symmetric and plain simplicial data.
///
/// faces[n][i] is d_i : X_n -> X_{n-1} for 1 <= n <= N, 0 <= i <= n
/// (faces[0] is empty). degeneracies[n][i] is s_i : X_n -> X_{n+1} for
/// 0 <= n < N, 0 <= i <= n (degeneracies[N] is empty).
class SimplicialData {
 public:
  SimplicialData() = default;
  SimplicialData(int trunc, std::vector<std::vector<std::string>> cells,
                 std::vector<std::vector<CellTable>> faces,
                 std::vector<std::vector<CellTable>> degeneracies);

  int trunc() const noexcept { return trunc_; }
  std::size_t size(int level) const { return cells_.at(static_cast<std::size_t>(level)).size(); }
  std::vector<std::size_t> level_sizes() const;
  std::size_t total_cells() const;
  bool is_empty() const { return cells_.front().empty(); }

  const std::string& name(int level, CellId x) const;
  const std::vector<std::string>& names(int level) const {
    return cells_.at(static_cast<std::size_t>(level));
  }
  std::optional<CellId> find(int level, std::string_view name) const;
  /// Like find, but throws InvalidArgument when the name is unknown.
  CellId at(int level, std::string_view name) const;

  CellId face(int n, int i, CellId x) const {
    return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][x];
  }
  CellId degeneracy(int n, int i, CellId x) const {
    return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][x];
  }
  const std::vector<std::vector<CellTable>>& faces() const noexcept { return faces_; }
  const std::vector<std::vector<CellTable>>& degeneracies() const noexcept {
    return degeneracies_;
  }

  /// beta^* x for an order-preserving beta, via its epi-mono factorization
  /// into face and degeneracy tables.
  CellId pull_monotone(const UMap& beta, CellId x) const;

  void check_cell(int level, CellId x) const;

 private:
  int trunc_ = 0;
  std::vector<std::vector<std::string>> cells_;
  std::vector<std::vector<CellTable>> faces_;
  std::vector<std::vector<CellTable>> degeneracies_;
  std::vector<std::unordered_map<std::string, CellId>> index_;
};

/// An N-truncated symmetric set. swaps[n][k-1] is the action of the adjacent
/// transposition exchanging k-1 and k on [n], for 1 <= k <= n.
///
/// Construction checks table shapes and ranges only; the relations between
/// generators are checked by validate().
class TruncSymSet {
 public:
  TruncSymSet() : TruncSymSet(empty(0)) {}
  TruncSymSet(int trunc, std::vector<std::vector<std::string>> cells,
              std::vector<std::vector<CellTable>> faces,
              std::vector<std::vector<CellTable>> degeneracies,
              std::vector<std::vector<CellTable>> swaps);

  static TruncSymSet empty(int trunc);
  static TruncSymSet terminal(int trunc);

  int trunc() const noexcept { return data_.trunc(); }
  std::size_t size(int level) const { return data_.size(level); }
  std::vector<std::size_t> level_sizes() const { return data_.level_sizes(); }
  std::size_t total_cells() const { return data_.total_cells(); }
  bool is_empty() const { return data_.is_empty(); }
  bool is_reduced() const { return size(0) == 1; }

  const std::string& name(int level, CellId x) const { return data_.name(level, x); }
  const std::vector<std::string>& names(int level) const { return data_.names(level); }
  std::optional<CellId> find(int level, std::string_view name) const {
    return data_.find(level, name);
  }
  CellId at(int level, std::string_view name) const { return data_.at(level, name); }

  CellId face(int n, int i, CellId x) const { return data_.face(n, i, x); }
  CellId degeneracy(int n, int i, CellId x) const { return data_.degeneracy(n, i, x); }
  CellId swap(int n, int k, CellId x) const {
    return swaps_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)][x];
  }

  const SimplicialData& simplicial() const noexcept { return data_; }
  const std::vector<std::vector<CellTable>>& faces() const noexcept { return data_.faces(); }
  const std::vector<std::vector<CellTable>>& degeneracies() const noexcept {
    return data_.degeneracies();
  }
  const std::vector<std::vector<CellTable>>& swaps() const noexcept { return swaps_; }

 private:
  SimplicialData data_;
  std::vector<std::vector<CellTable>> swaps_;
};

/// One generator of the presentation, acting on cells at `level`.
struct Generator {
  enum class Kind { face, degeneracy, swap };
  Kind kind;
  int level;
  int index;

  int target_level() const noexcept;
  /// The underlying map of ordinals (contravariant to the action).
  UMap umap() const;
  std::string label() const;
};

/// All generators whose action starts at `level` in an N-truncated object.
std::vector<Generator> generators_from(int level, int trunc);

CellId apply(const TruncSymSet& X, const Generator& g, CellId x);

/// phi^* x for an arbitrary phi : [m] -> [n] with x in X_n.
///
/// phi is split as (order-preserving) o (permutation) by a stable sort of its
/// value table. The order-preserving part acts through faces and degeneracies,
/// the permutation through a bubble-sort word in adjacent swaps.
CellId act(const TruncSymSet& X, const UMap& phi, CellId x);

/// Checks every generator relation exhaustively, then functoriality of act on
/// `random_pairs` random composable pairs.
Report validate(const TruncSymSet& X, int random_pairs = 200, std::uint64_t seed = 0x5eedULL);

/// A levelwise function between two symmetric sets of equal truncation.
struct SymMap {
  std::vector<CellTable> levels;

  CellId operator()(int level, CellId x) const {
    return levels[static_cast<std::size_t>(level)][x];
  }
  friend bool operator==(const SymMap&, const SymMap&) = default;
};

SymMap identity_map(const TruncSymSet& X);
/// g o f.
SymMap compose_maps(const SymMap& g, const SymMap& f);
/// Checks that F is a total levelwise function X -> Y commuting with every
/// face, degeneracy and swap table.
Report check_sym_map(const SymMap& F, const TruncSymSet& X, const TruncSymSet& Y);
bool is_levelwise_bijective(const SymMap& F, const TruncSymSet& X, const TruncSymSet& Y);

/// Builds a symmetric set from cell names and an action rule. `pull(phi, x)`
/// must return phi^* x for phi : [m] -> [n] and x an index into level n.
using PullFn = std::function<CellId(const UMap& phi, CellId x)>;
TruncSymSet build_from_action(int trunc, std::vector<std::vector<std::string>> cells,
                              const PullFn& pull);

/// The edge x -> dagger(x) = tau_1^* x.
CellId dagger(const TruncSymSet& X, CellId edge);

}  // namespace symspine
