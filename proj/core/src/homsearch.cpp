#include "symspine/homsearch.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "symspine/constructions.hpp"
#include "symspine/error.hpp"
#include "symspine/spiny.hpp"

namespace symspine {

namespace {

constexpr long kUnset = -1;

class Search {
 public:
  Search(const TruncSymSet& X, const TruncSymSet& Y, std::size_t cap)
      : X_(X), Y_(Y), cap_(cap), N_(X.trunc()) {
    for (CellId y = 0; y < Y.size(1); ++y) {
      edges_between_[{Y.face(1, 1, y), Y.face(1, 0, y)}].push_back(y);
    }
    if (N_ >= 2) {
      touching_.resize(X.size(1));
      for (CellId x = 0; x < X.size(2); ++x) {
        for (int i = 0; i < 3; ++i) touching_[X.face(2, i, x)].push_back(x);
      }
      for (CellId y = 0; y < Y.size(2); ++y) {
        composites_[{Y.face(2, 2, y), Y.face(2, 0, y)}].insert(Y.face(2, 1, y));
      }
    }
    for (int n = 2; n <= N_; ++n) {
      auto& xs = x_edges_.emplace_back();
      for (CellId x = 0; x < X.size(n); ++x) xs.push_back(edge_tuple(X, n, x));
      auto& ys = y_cells_.emplace_back();
      for (CellId y = 0; y < Y.size(n); ++y) ys[edge_tuple(Y, n, y)].push_back(y);
    }
  }

  std::vector<SymMap> run() {
    State s;
    s.f0.assign(X_.size(0), kUnset);
    s.f1.assign(X_.trunc() >= 1 ? X_.size(1) : 0, kUnset);
    vertices(s, 0);
    std::sort(found_.begin(), found_.end(), [&](const SymMap& a, const SymMap& b) {
      if (a.levels.size() > 1 && a.levels[1] != b.levels[1]) return a.levels[1] < b.levels[1];
      return a.levels < b.levels;
    });
    return std::move(found_);
  }

 private:
  struct Slot {
    int level;
    CellId cell;
    const std::vector<CellId>* candidates;
  };

  struct State {
    std::vector<long> f0;
    std::vector<long> f1;
  };

  void tick() {
    if (++nodes_ > cap_) {
      throw SearchCapExceeded("hom search exceeded " + std::to_string(cap_) + " nodes");
    }
  }

  void vertices(State& s, CellId v) {
    if (v == X_.size(0)) {
      State t = s;
      for (CellId w = 0; w < X_.size(0) && N_ >= 1; ++w) {
        if (!assign(t, X_.degeneracy(0, 0, w), Y_.degeneracy(0, 0, static_cast<CellId>(t.f0[w])))) {
          return;
        }
      }
      edges(t);
      return;
    }
    for (CellId w = 0; w < Y_.size(0); ++w) {
      tick();
      s.f0[v] = w;
      vertices(s, v + 1);
    }
    s.f0[v] = kUnset;
  }

  void edges(const State& s) {
    const auto it = std::find(s.f1.begin(), s.f1.end(), kUnset);
    if (it == s.f1.end()) {
      higher(s);
      return;
    }
    const auto e = static_cast<CellId>(it - s.f1.begin());
    const auto key = std::make_pair(static_cast<CellId>(s.f0[X_.face(1, 1, e)]),
                                    static_cast<CellId>(s.f0[X_.face(1, 0, e)]));
    const auto found = edges_between_.find(key);
    if (found == edges_between_.end()) return;
    for (CellId y : found->second) {
      tick();
      State t = s;
      if (assign(t, e, y)) edges(t);
    }
  }

  // Sets f1[e] = y and propagates through dagger and 2-cell composites.
  bool assign(State& s, CellId e, CellId y) {
    std::deque<std::pair<CellId, CellId>> queue{{e, y}};
    while (!queue.empty()) {
      const auto [a, b] = queue.front();
      queue.pop_front();
      if (s.f1[a] != kUnset) {
        if (s.f1[a] != static_cast<long>(b)) return false;
        continue;
      }
      if (Y_.face(1, 1, b) != static_cast<CellId>(s.f0[X_.face(1, 1, a)]) ||
          Y_.face(1, 0, b) != static_cast<CellId>(s.f0[X_.face(1, 0, a)])) {
        return false;
      }
      s.f1[a] = b;
      queue.push_back({dagger(X_, a), dagger(Y_, b)});
      if (N_ < 2) continue;
      for (CellId x : touching_[a]) {
        const long f01 = s.f1[X_.face(2, 2, x)];
        const long f12 = s.f1[X_.face(2, 0, x)];
        if (f01 == kUnset || f12 == kUnset) continue;
        const auto c = composites_.find({static_cast<CellId>(f01), static_cast<CellId>(f12)});
        if (c == composites_.end()) return false;
        const CellId e02 = X_.face(2, 1, x);
        if (s.f1[e02] != kUnset) {
          if (!c->second.count(static_cast<CellId>(s.f1[e02]))) return false;
        } else if (c->second.size() == 1) {
          queue.push_back({e02, *c->second.begin()});
        }
      }
    }
    return true;
  }

  void higher(const State& s) {
    SymMap F;
    F.levels.resize(static_cast<std::size_t>(N_) + 1);
    for (long v : s.f0) F.levels[0].push_back(static_cast<CellId>(v));
    if (N_ >= 1) {
      for (long e : s.f1) F.levels[1].push_back(static_cast<CellId>(e));
    }
    // Candidate images of every higher cell, in level order.
    std::vector<Slot> slots;
    for (int n = 2; n <= N_; ++n) {
      const auto k = static_cast<std::size_t>(n - 2);
      F.levels[static_cast<std::size_t>(n)].assign(X_.size(n), 0);
      for (CellId x = 0; x < X_.size(n); ++x) {
        std::vector<CellId> image = x_edges_[k][x];
        for (auto& e : image) e = F.levels[1][e];
        const auto it = y_cells_[k].find(image);
        if (it == y_cells_[k].end()) return;
        slots.push_back({n, x, &it->second});
      }
    }
    fill(F, slots, 0);
  }

  void fill(SymMap& F, const std::vector<Slot>& slots, std::size_t i) {
    if (i == slots.size()) {
      if (check_sym_map(F, X_, Y_).pass) found_.push_back(F);
      return;
    }
    const Slot& slot = slots[i];
    for (CellId y : *slot.candidates) {
      if (slot.candidates->size() > 1) tick();
      F.levels[static_cast<std::size_t>(slot.level)][slot.cell] = y;
      fill(F, slots, i + 1);
    }
  }

  const TruncSymSet& X_;
  const TruncSymSet& Y_;
  std::size_t cap_;
  int N_;
  std::size_t nodes_ = 0;
  std::map<std::pair<CellId, CellId>, std::vector<CellId>> edges_between_;
  std::vector<std::vector<CellId>> touching_;
  std::map<std::pair<CellId, CellId>, std::set<CellId>> composites_;
  std::vector<std::vector<std::vector<CellId>>> x_edges_;
  std::vector<std::map<std::vector<CellId>, std::vector<CellId>>> y_cells_;
  std::vector<SymMap> found_;
};

}  // namespace

Report is_hom(const SymMap& F, const TruncSymSet& X, const TruncSymSet& Y) {
  Report r = check_sym_map(F, X, Y);
  if (!r.pass || X.trunc() < 1) return r;
  for (CellId e = 0; e < X.size(1); ++e) {
    if (F(1, dagger(X, e)) != dagger(Y, F(1, e))) {
      return Report::fail(1, X.name(1, e), "map does not commute with dagger");
    }
  }
  return r;
}

HomSearchOptions default_search_options() {
  HomSearchOptions o;
  if (const char* env = std::getenv("SYMSPINE_SEARCH_CAP"); env && *env) {
    try {
      std::size_t used = 0;
      o.node_cap = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("SYMSPINE_SEARCH_CAP is not a number: ") + env);
    }
  }
  return o;
}

std::vector<SymMap> enumerate_homs(const TruncSymSet& X, const TruncSymSet& Y,
                                   const HomSearchOptions& options) {
  if (X.trunc() != Y.trunc()) throw InvalidArgument("enumerate_homs: truncation mismatch");
  if (X.is_empty()) {
    SymMap F;
    F.levels.resize(static_cast<std::size_t>(X.trunc()) + 1);
    return {F};
  }
  if (Y.is_empty()) return {};
  return Search(X, Y, options.node_cap).run();
}

Report verify_word_classifier(int m, const TruncSymSet& X, const HomSearchOptions& options) {
  if (m < 0 || X.trunc() < m) {
    throw InvalidArgument("verify_word_classifier: need 0 <= m <= trunc");
  }
  if (!X.is_reduced()) throw InvalidArgument("verify_word_classifier: target is not reduced");
  if (!is_spiny(X).pass) throw InvalidArgument("verify_word_classifier: target is not spiny");
  const TruncSymSet W = word_classifier(m, X.trunc());
  std::string canonical = "(";
  for (int i = 0; i <= m; ++i) canonical += (i ? "," : "") + std::to_string(i);
  const CellId top = W.at(m, canonical + ")");

  const auto homs = enumerate_homs(W, X, options);
  std::map<CellId, std::size_t> image;
  for (std::size_t k = 0; k < homs.size(); ++k) {
    const CellId y = homs[k](m, top);
    if (!image.emplace(y, k).second) {
      return Report::fail(m, X.name(m, y), "two maps send the canonical cell to the same cell");
    }
  }
  for (CellId y = 0; y < X.size(m); ++y) {
    if (!image.count(y)) return Report::fail(m, X.name(m, y), "no map reaches this cell");
  }
  return Report::ok();
}

}  // namespace symspine
