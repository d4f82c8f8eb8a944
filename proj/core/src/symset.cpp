#include "symspine/symset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "symspine/error.hpp"

namespace symspine {

namespace {

std::string level_str(int n) { return std::to_string(n); }

void check_table(const CellTable& t, std::size_t dom, std::size_t cod, const std::string& what) {
  if (t.size() != dom) {
    throw InvalidArgument(what + ": table has " + std::to_string(t.size()) + " entries, expected " +
                          std::to_string(dom));
  }
  for (CellId v : t) {
    if (v >= cod) throw InvalidArgument(what + ": entry " + std::to_string(v) + " out of range");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SimplicialData

SimplicialData::SimplicialData(int trunc, std::vector<std::vector<std::string>> cells,
                               std::vector<std::vector<CellTable>> faces,
                               std::vector<std::vector<CellTable>> degeneracies)
    : trunc_(trunc),
      cells_(std::move(cells)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  if (trunc_ < 0) throw InvalidArgument("truncation must be non-negative");
  const auto levels = static_cast<std::size_t>(trunc_) + 1;
  if (cells_.size() != levels) {
    throw InvalidArgument("expected cell lists for levels 0.." + level_str(trunc_));
  }
  if (cells_[0].empty()) {
    for (const auto& c : cells_) {
      if (!c.empty()) throw InvalidArgument("level 0 is empty but a higher level is not");
    }
  }
  if (faces_.size() != levels || degeneracies_.size() != levels) {
    throw InvalidArgument("face/degeneracy tables must have one entry per level");
  }
  for (std::size_t n = 0; n < levels; ++n) {
    const std::size_t want_faces = n == 0 ? 0 : n + 1;
    if (faces_[n].size() != want_faces) {
      throw InvalidArgument("level " + std::to_string(n) + " must have " +
                            std::to_string(want_faces) + " face tables");
    }
    for (std::size_t i = 0; i < faces_[n].size(); ++i) {
      check_table(faces_[n][i], cells_[n].size(), cells_[n - 1].size(),
                  "face d_" + std::to_string(i) + " at level " + std::to_string(n));
    }
    const std::size_t want_degs = n + 1 < levels ? n + 1 : 0;
    if (degeneracies_[n].size() != want_degs) {
      throw InvalidArgument("level " + std::to_string(n) + " must have " +
                            std::to_string(want_degs) + " degeneracy tables");
    }
    for (std::size_t i = 0; i < degeneracies_[n].size(); ++i) {
      check_table(degeneracies_[n][i], cells_[n].size(), cells_[n + 1].size(),
                  "degeneracy s_" + std::to_string(i) + " at level " + std::to_string(n));
    }
  }
  index_.resize(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    for (std::size_t x = 0; x < cells_[n].size(); ++x) {
      if (!index_[n].emplace(cells_[n][x], static_cast<CellId>(x)).second) {
        throw InvalidArgument("duplicate cell name '" + cells_[n][x] + "' at level " +
                              std::to_string(n));
      }
    }
  }
}

std::vector<std::size_t> SimplicialData::level_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells_) out.push_back(c.size());
  return out;
}

std::size_t SimplicialData::total_cells() const {
  std::size_t total = 0;
  for (const auto& c : cells_) total += c.size();
  return total;
}

const std::string& SimplicialData::name(int level, CellId x) const {
  check_cell(level, x);
  return cells_[static_cast<std::size_t>(level)][x];
}

std::optional<CellId> SimplicialData::find(int level, std::string_view name) const {
  if (level < 0 || level > trunc_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(level)];
  auto it = idx.find(std::string(name));
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

CellId SimplicialData::at(int level, std::string_view name) const {
  auto x = find(level, name);
  if (!x) {
    throw InvalidArgument("no cell named '" + std::string(name) + "' at level " +
                          std::to_string(level));
  }
  return *x;
}

void SimplicialData::check_cell(int level, CellId x) const {
  if (level < 0 || level > trunc_) {
    throw InvalidArgument("level " + std::to_string(level) + " exceeds truncation " +
                          std::to_string(trunc_));
  }
  if (x >= cells_[static_cast<std::size_t>(level)].size()) {
    throw InvalidArgument("cell index " + std::to_string(x) + " out of range at level " +
                          std::to_string(level));
  }
}

CellId SimplicialData::pull_monotone(const UMap& beta, CellId x) const {
  if (beta.dom() > trunc_ || beta.cod() > trunc_) {
    throw InvalidArgument("map " + beta.to_string() + " leaves truncation " +
                          std::to_string(trunc_));
  }
  check_cell(beta.cod(), x);
  std::vector<int> v(beta.values().begin(), beta.values().end());
  int cod = beta.cod();

  // Mono part: apply d_j for every value j missed by beta, largest first.
  std::vector<bool> hit(static_cast<std::size_t>(cod) + 1, false);
  for (int y : v) hit[static_cast<std::size_t>(y)] = true;
  for (int j = cod; j >= 0; --j) {
    if (hit[static_cast<std::size_t>(j)]) continue;
    x = face(cod, j, x);
    for (int& y : v) {
      if (y > j) --y;
    }
    --cod;
  }

  // Epi part: beta = beta' o sigma_i whenever beta(i) == beta(i+1); the
  // recorded degeneracies are applied innermost first.
  std::vector<int> degs;
  while (static_cast<int>(v.size()) - 1 > cod) {
    std::size_t i = 0;
    while (v[i] != v[i + 1]) ++i;
    degs.push_back(static_cast<int>(i));
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
  int level = cod;
  for (auto it = degs.rbegin(); it != degs.rend(); ++it) {
    x = degeneracy(level, *it, x);
    ++level;
  }
  return x;
}

// ---------------------------------------------------------------------------
// TruncSymSet

TruncSymSet::TruncSymSet(int trunc, std::vector<std::vector<std::string>> cells,
                         std::vector<std::vector<CellTable>> faces,
                         std::vector<std::vector<CellTable>> degeneracies,
                         std::vector<std::vector<CellTable>> swaps)
    : data_(trunc, std::move(cells), std::move(faces), std::move(degeneracies)),
      swaps_(std::move(swaps)) {
  const auto levels = static_cast<std::size_t>(trunc) + 1;
  if (swaps_.size() != levels) throw InvalidArgument("swap tables must have one entry per level");
  for (std::size_t n = 0; n < levels; ++n) {
    if (swaps_[n].size() != n) {
      throw InvalidArgument("level " + std::to_string(n) + " must have " + std::to_string(n) +
                            " swap tables");
    }
    for (std::size_t k = 0; k < n; ++k) {
      check_table(swaps_[n][k], data_.size(static_cast<int>(n)), data_.size(static_cast<int>(n)),
                  "swap t_" + std::to_string(k + 1) + " at level " + std::to_string(n));
    }
  }
}

TruncSymSet TruncSymSet::empty(int trunc) {
  const auto levels = static_cast<std::size_t>(trunc) + 1;
  std::vector<std::vector<CellTable>> faces(levels), degs(levels), swaps(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    if (n > 0) faces[n].resize(n + 1);
    if (n + 1 < levels) degs[n].resize(n + 1);
    swaps[n].resize(n);
  }
  return TruncSymSet(trunc, std::vector<std::vector<std::string>>(levels), std::move(faces),
                     std::move(degs), std::move(swaps));
}

TruncSymSet TruncSymSet::terminal(int trunc) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(trunc) + 1, {"*"});
  return build_from_action(trunc, std::move(cells), [](const UMap&, CellId) { return CellId{0}; });
}

// ---------------------------------------------------------------------------
// Generators and act

int Generator::target_level() const noexcept {
  switch (kind) {
    case Kind::face:
      return level - 1;
    case Kind::degeneracy:
      return level + 1;
    case Kind::swap:
      return level;
  }
  return level;
}

UMap Generator::umap() const {
  switch (kind) {
    case Kind::face:
      return coface(level, index);
    case Kind::degeneracy:
      return codegeneracy(level, index);
    case Kind::swap:
      return transposition(level, index);
  }
  throw InvalidArgument("unknown generator kind");
}

std::string Generator::label() const {
  const char* sym = kind == Kind::face ? "d" : kind == Kind::degeneracy ? "s" : "t";
  return std::string(sym) + "_" + std::to_string(index) + "@" + std::to_string(level);
}

std::vector<Generator> generators_from(int level, int trunc) {
  std::vector<Generator> gens;
  if (level >= 1) {
    for (int i = 0; i <= level; ++i) gens.push_back({Generator::Kind::face, level, i});
  }
  if (level < trunc) {
    for (int i = 0; i <= level; ++i) gens.push_back({Generator::Kind::degeneracy, level, i});
  }
  for (int k = 1; k <= level; ++k) gens.push_back({Generator::Kind::swap, level, k});
  return gens;
}

CellId apply(const TruncSymSet& X, const Generator& g, CellId x) {
  switch (g.kind) {
    case Generator::Kind::face:
      return X.face(g.level, g.index, x);
    case Generator::Kind::degeneracy:
      return X.degeneracy(g.level, g.index, x);
    case Generator::Kind::swap:
      return X.swap(g.level, g.index, x);
  }
  return x;
}

CellId act(const TruncSymSet& X, const UMap& phi, CellId x) {
  const int m = phi.dom();
  if (m > X.trunc() || phi.cod() > X.trunc()) {
    throw InvalidArgument("act: map " + phi.to_string() + " exceeds truncation " +
                          std::to_string(X.trunc()));
  }
  X.simplicial().check_cell(phi.cod(), x);
  if (phi.is_order_preserving()) return X.simplicial().pull_monotone(phi, x);

  // phi o s is order-preserving for the stable sorting permutation s.
  std::vector<int> order(static_cast<std::size_t>(m) + 1);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return phi(a) < phi(b); });
  std::vector<int> beta(order.size());
  std::vector<int> perm(order.size());  // s^{-1}
  for (std::size_t k = 0; k < order.size(); ++k) {
    beta[k] = phi(order[k]);
    perm[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  }
  x = X.simplicial().pull_monotone(UMap(m, phi.cod(), std::move(beta)), x);

  // perm = t_{k_r} o ... o t_{k_1} where k_1, k_2, ... are the bubble-sort
  // swaps; its action applies t_{k_r} first.
  std::vector<int> word;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 1; k < perm.size(); ++k) {
      if (perm[k - 1] > perm[k]) {
        std::swap(perm[k - 1], perm[k]);
        word.push_back(static_cast<int>(k));
        changed = true;
      }
    }
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = X.swap(m, *it, x);
  return x;
}

CellId dagger(const TruncSymSet& X, CellId edge) {
  if (X.trunc() < 1) throw InvalidArgument("dagger: truncation must be at least 1");
  return X.swap(1, 1, edge);
}

// ---------------------------------------------------------------------------
// validate

namespace {

std::string relation_family(const Generator& g, const Generator& h) {
  const bool g_swap = g.kind == Generator::Kind::swap;
  const bool h_swap = h.kind == Generator::Kind::swap;
  if (!g_swap && !h_swap) return "simplicial identity";
  if (g_swap && h_swap) return "symmetric group relation";
  return "mixed swap relation";
}

}  // namespace

Report validate(const TruncSymSet& X, int random_pairs, std::uint64_t seed) {
  const int N = X.trunc();

  // Composites of two generators against the normal form computed by act.
  // Generator g acts X_c -> X_b (so g.umap() : [b] -> [c]) and h acts
  // X_b -> X_a; we need h^* g^* = (g o h)^*.
  for (int c = 0; c <= N; ++c) {
    for (const Generator& g : generators_from(c, N)) {
      const int b = g.target_level();
      const UMap gu = g.umap();
      for (const Generator& h : generators_from(b, N)) {
        const UMap composite = compose(gu, h.umap());
        for (CellId x = 0; x < X.size(c); ++x) {
          const CellId lhs = apply(X, h, apply(X, g, x));
          const CellId rhs = act(X, composite, x);
          if (lhs != rhs) {
            return Report::fail(
                c, X.name(c, x),
                relation_family(g, h) + " violated: " + h.label() + " after " + g.label() +
                    " on cell '" + X.name(c, x) + "' gives '" + X.name(h.target_level(), lhs) +
                    "' but " + composite.to_string() + " acts as '" +
                    X.name(h.target_level(), rhs) + "'");
          }
        }
      }
    }
  }

  // Coxeter relations among adjacent swaps.
  for (int n = 2; n <= N; ++n) {
    for (CellId x = 0; x < X.size(n); ++x) {
      for (int k = 1; k < n; ++k) {
        const CellId lhs = X.swap(n, k, X.swap(n, k + 1, X.swap(n, k, x)));
        const CellId rhs = X.swap(n, k + 1, X.swap(n, k, X.swap(n, k + 1, x)));
        if (lhs != rhs) {
          return Report::fail(n, X.name(n, x),
                              "symmetric group relation violated: braid t_" + std::to_string(k) +
                                  " t_" + std::to_string(k + 1) + " on cell '" + X.name(n, x) +
                                  "'");
        }
        for (int l = k + 2; l <= n; ++l) {
          if (X.swap(n, k, X.swap(n, l, x)) != X.swap(n, l, X.swap(n, k, x))) {
            return Report::fail(n, X.name(n, x),
                                "symmetric group relation violated: t_" + std::to_string(k) +
                                    " and t_" + std::to_string(l) + " do not commute on '" +
                                    X.name(n, x) + "'");
          }
        }
      }
    }
  }

  // Functoriality on random composable pairs.
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < random_pairs && !X.is_empty(); ++trial) {
    const int a = uniform_below(rng, N + 1);
    const int b = uniform_below(rng, N + 1);
    const int c = uniform_below(rng, N + 1);
    const UMap phi = random_umap(b, c, rng);
    const UMap psi = random_umap(a, b, rng);
    const auto x = static_cast<CellId>(uniform_below(rng, static_cast<int>(X.size(c))));
    const CellId lhs = act(X, psi, act(X, phi, x));
    const CellId rhs = act(X, compose(phi, psi), x);
    if (lhs != rhs) {
      return Report::fail(c, X.name(c, x),
                          "functoriality violated: " + psi.to_string() + " after " +
                              phi.to_string() + " on '" + X.name(c, x) + "'");
    }
  }
  return Report::ok();
}

// ---------------------------------------------------------------------------
// SymMap

SymMap identity_map(const TruncSymSet& X) {
  SymMap F;
  for (int n = 0; n <= X.trunc(); ++n) {
    CellTable t(X.size(n));
    std::iota(t.begin(), t.end(), CellId{0});
    F.levels.push_back(std::move(t));
  }
  return F;
}

SymMap compose_maps(const SymMap& g, const SymMap& f) {
  if (g.levels.size() != f.levels.size()) throw InvalidArgument("compose_maps: truncation mismatch");
  SymMap out;
  for (std::size_t n = 0; n < f.levels.size(); ++n) {
    CellTable t(f.levels[n].size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = g.levels[n].at(f.levels[n][x]);
    out.levels.push_back(std::move(t));
  }
  return out;
}

Report check_sym_map(const SymMap& F, const TruncSymSet& X, const TruncSymSet& Y) {
  if (X.trunc() != Y.trunc()) {
    return Report::fail(-1, "", "truncation mismatch: " + std::to_string(X.trunc()) + " vs " +
                                    std::to_string(Y.trunc()));
  }
  const int N = X.trunc();
  if (F.levels.size() != static_cast<std::size_t>(N) + 1) {
    return Report::fail(-1, "", "map must have one table per level 0.." + std::to_string(N));
  }
  for (int n = 0; n <= N; ++n) {
    const auto& t = F.levels[static_cast<std::size_t>(n)];
    if (t.size() != X.size(n)) {
      return Report::fail(n, "", "level table has wrong length");
    }
    for (CellId y : t) {
      if (y >= Y.size(n)) return Report::fail(n, "", "level table entry out of range");
    }
  }
  for (int n = 0; n <= N; ++n) {
    for (const Generator& g : generators_from(n, N)) {
      const int m = g.target_level();
      for (CellId x = 0; x < X.size(n); ++x) {
        const CellId lhs = F(m, apply(X, g, x));
        const CellId rhs = apply(Y, g, F(n, x));
        if (lhs != rhs) {
          return Report::fail(n, X.name(n, x),
                              "map does not commute with " + g.label() + " on '" + X.name(n, x) +
                                  "': F(g x) = '" + Y.name(m, lhs) + "', g(F x) = '" +
                                  Y.name(m, rhs) + "'");
        }
      }
    }
  }
  return Report::ok();
}

bool is_levelwise_bijective(const SymMap& F, const TruncSymSet& X, const TruncSymSet& Y) {
  for (int n = 0; n <= X.trunc(); ++n) {
    if (X.size(n) != Y.size(n)) return false;
    std::vector<bool> seen(Y.size(n), false);
    for (CellId y : F.levels[static_cast<std::size_t>(n)]) {
      if (seen[y]) return false;
      seen[y] = true;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Builder

TruncSymSet build_from_action(int trunc, std::vector<std::vector<std::string>> cells,
                              const PullFn& pull) {
  const auto levels = static_cast<std::size_t>(trunc) + 1;
  if (cells.size() != levels) throw InvalidArgument("build_from_action: wrong number of levels");
  std::vector<std::vector<CellTable>> faces(levels), degs(levels), swaps(levels);
  for (int n = 0; n <= trunc; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const std::size_t count = cells[un].size();
    auto fill = [&](const UMap& phi) {
      CellTable t(count);
      for (std::size_t x = 0; x < count; ++x) t[x] = pull(phi, static_cast<CellId>(x));
      return t;
    };
    if (n > 0) {
      for (int i = 0; i <= n; ++i) faces[un].push_back(fill(coface(n, i)));
    }
    if (n < trunc) {
      for (int i = 0; i <= n; ++i) degs[un].push_back(fill(codegeneracy(n, i)));
    }
    for (int k = 1; k <= n; ++k) swaps[un].push_back(fill(transposition(n, k)));
  }
  return TruncSymSet(trunc, std::move(cells), std::move(faces), std::move(degs), std::move(swaps));
}

}  // namespace symspine
