#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library algorithms being checked; everything is recomputed from value
// tables and multiplication tables directly.

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "symspine/algebra.hpp"

namespace oracle {

// chi_n o chi_{2n} o ... o chi_{2^{w-1} n}, applied innermost first.
inline std::vector<int> fold_power(int n, int w) {
  const int top = n << w;
  std::vector<int> out;
  for (int i = 0; i <= top; ++i) {
    int v = i;
    for (int s = w - 1; s >= 0; --s) v = std::abs((n << s) - v);
    out.push_back(v);
  }
  return out;
}

inline std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> out;
  for (int v : f) out.push_back(g[static_cast<std::size_t>(v)]);
  return out;
}

inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Closure of a generating set under the multiplication table.
inline std::set<int> closure(const symspine::FiniteGroup& G, std::set<int> gens) {
  std::set<int> h{G.unit()};
  bool grew = true;
  gens.insert(G.unit());
  while (grew) {
    grew = false;
    const std::vector<int> cur(h.begin(), h.end());
    for (int a : cur) {
      for (int g : gens) {
        if (h.insert(G.table()[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)]).second) {
          grew = true;
        }
      }
    }
  }
  return h;
}

inline int inv(const symspine::FiniteGroup& G, int a) {
  for (int b = 0; b < G.order(); ++b) {
    if (G.table()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == G.unit()) return b;
  }
  return -1;
}

inline int mul(const symspine::FiniteGroup& G, int a, int b) {
  return G.table()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

inline int comm(const symspine::FiniteGroup& G, int a, int b) {
  return mul(G, mul(G, inv(G, a), inv(G, b)), mul(G, a, b));
}

// Gamma^q of the subgroup generated by `gens` is trivial.
inline bool gamma_trivial(const symspine::FiniteGroup& G, const std::vector<int>& gens, int q) {
  const std::set<int> H = closure(G, {gens.begin(), gens.end()});
  std::set<int> term = H;
  for (int i = 1; i < q; ++i) {
    std::set<int> c;
    for (int a : term) {
      for (int b : H) c.insert(comm(G, a, b));
    }
    term = closure(G, c);
  }
  return term.size() == 1;
}

// Tuples (g_1..g_n) of G^n with trivial Gamma^q, counted by enumeration.
inline long count_tuples(const symspine::FiniteGroup& G, int n, int q) {
  long count = 0;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  while (true) {
    if (gamma_trivial(G, t, q)) ++count;
    int i = n - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == G.order() - 1) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return count;
}

// Pairwise commuting n-tuples.
inline long commuting_tuples(const symspine::FiniteGroup& G, int n) {
  long count = 0;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < t.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < t.size() && ok; ++b) ok = mul(G, t[a], t[b]) == mul(G, t[b], t[a]);
    }
    if (ok) ++count;
    int i = n - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == G.order() - 1) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return count;
}

// Ladder example: functions [n] -> {0..K} landing in some {0, k, k+1}.
inline std::vector<std::vector<int>> ladder_functions(int K, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    for (int k = 0; k < K; ++k) {
      if (std::all_of(f.begin(), f.end(), [&](int v) { return v == 0 || v == k || v == k + 1; })) {
        out.push_back(f);
        break;
      }
    }
    int i = n;
    while (i >= 0 && f[static_cast<std::size_t>(i)] == K) f[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++f[static_cast<std::size_t>(i)];
  }
  return out;
}

inline bool consecutive(const std::vector<int>& f) {
  return *std::max_element(f.begin(), f.end()) - *std::min_element(f.begin(), f.end()) <= 1;
}

// After `steps` flat steps, (u,f) ~ (v,f) exactly when this holds.
inline bool ladder_merged(const std::vector<int>& f, int steps) {
  return consecutive(f) || *std::max_element(f.begin(), f.end()) <= steps + 1;
}

}  // namespace oracle
