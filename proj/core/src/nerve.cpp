#include "symspine/nerve.hpp"

#include <map>

#include "symspine/error.hpp"

namespace symspine {

namespace {

std::string chain_name(const FiniteGroupoid& G, const std::vector<int>& chain) {
  if (chain.size() == 1) return G.morphism(chain[0]).name;
  std::string s = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += ',';
    s += G.morphism(chain[i]).name;
  }
  return s + ")";
}

}  // namespace

TruncSymSet nerve(const FiniteGroupoid& G, int trunc) {
  if (trunc < 0) throw InvalidArgument("nerve: negative truncation");
  const auto levels = static_cast<std::size_t>(trunc) + 1;

  // chains[n] lists level-n cells; level 0 stores the object as a 1-vector.
  std::vector<std::vector<std::vector<int>>> chains(levels);
  std::vector<std::map<std::vector<int>, CellId>> index(levels);
  std::vector<std::vector<std::string>> names(levels);
  for (int x = 0; x < G.object_count(); ++x) {
    chains[0].push_back({x});
    names[0].push_back(G.object_name(x));
  }
  if (trunc >= 1) {
    for (int f = 0; f < G.morphism_count(); ++f) chains[1].push_back({f});
  }
  for (std::size_t n = 2; n < levels; ++n) {
    for (const auto& c : chains[n - 1]) {
      for (int g : G.out_of(G.tgt(c.back()))) {
        auto next = c;
        next.push_back(g);
        chains[n].push_back(std::move(next));
      }
    }
  }
  for (std::size_t n = 0; n < levels; ++n) {
    for (std::size_t x = 0; x < chains[n].size(); ++x) {
      index[n].emplace(chains[n][x], static_cast<CellId>(x));
      if (n > 0) names[n].push_back(chain_name(G, chains[n][x]));
    }
  }

  auto pull = [&](const UMap& phi, CellId x) -> CellId {
    const int n = phi.cod();
    const auto& c = chains[static_cast<std::size_t>(n)][x];
    std::vector<int> vertex(static_cast<std::size_t>(n) + 1);
    if (n == 0) {
      vertex[0] = c[0];
    } else {
      vertex[0] = G.src(c[0]);
      for (int t = 1; t <= n; ++t) vertex[static_cast<std::size_t>(t)] = G.tgt(c[static_cast<std::size_t>(t - 1)]);
    }
    // Composite edge from vertex i to vertex j.
    auto entry = [&](int i, int j) {
      if (i == j) return G.identity(vertex[static_cast<std::size_t>(i)]);
      const int lo = std::min(i, j);
      const int hi = std::max(i, j);
      int f = c[static_cast<std::size_t>(lo)];
      for (int t = lo + 1; t < hi; ++t) f = G.compose(f, c[static_cast<std::size_t>(t)]);
      return i < j ? f : G.inverse(f);
    };
    const int m = phi.dom();
    std::vector<int> out;
    if (m == 0) {
      out.push_back(vertex[static_cast<std::size_t>(phi(0))]);
    } else {
      for (int t = 1; t <= m; ++t) out.push_back(entry(phi(t - 1), phi(t)));
    }
    return index[static_cast<std::size_t>(m)].at(out);
  };
  return build_from_action(trunc, std::move(names), pull);
}

TruncSymSet nerve(const FiniteGroup& G, int trunc) { return nerve(groupoid_of_group(G), trunc); }

CellId representable_index(int m, std::span<const int> values) {
  CellId idx = 0;
  for (int v : values) idx = idx * static_cast<CellId>(m + 1) + static_cast<CellId>(v);
  return idx;
}

TruncSymSet representable(int m, int trunc) {
  if (m < 0 || trunc < 0) throw InvalidArgument("representable: negative argument");
  const auto levels = static_cast<std::size_t>(trunc) + 1;
  std::vector<std::vector<std::vector<int>>> funcs(levels);
  std::vector<std::vector<std::string>> names(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    std::vector<int> f(n + 1, 0);
    while (true) {
      std::string s = "(";
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f[i]);
      }
      names[n].push_back(s + ")");
      funcs[n].push_back(f);
      // Lexicographic successor.
      std::size_t i = f.size();
      while (i > 0 && f[i - 1] == m) f[--i] = 0;
      if (i == 0) break;
      ++f[i - 1];
    }
  }
  auto pull = [&](const UMap& phi, CellId x) -> CellId {
    const auto& f = funcs[static_cast<std::size_t>(phi.cod())][x];
    std::vector<int> g(static_cast<std::size_t>(phi.dom()) + 1);
    for (int i = 0; i <= phi.dom(); ++i) g[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(phi(i))];
    return representable_index(m, g);
  };
  return build_from_action(trunc, std::move(names), pull);
}

SymMap nerve_map(const FiniteGroup& G, const FiniteGroup& H, const std::vector<Element>& hom,
                 int trunc) {
  if (static_cast<int>(hom.size()) != G.order()) {
    throw InvalidArgument("nerve_map: homomorphism table has wrong size");
  }
  for (Element a = 0; a < G.order(); ++a) {
    for (Element b = 0; b < G.order(); ++b) {
      if (hom[static_cast<std::size_t>(G.mul(a, b))] !=
          H.mul(hom[static_cast<std::size_t>(a)], hom[static_cast<std::size_t>(b)])) {
        throw InvalidArgument("nerve_map: table is not a homomorphism");
      }
    }
  }
  SymMap F;
  F.levels.push_back({0});
  std::size_t count = 1;
  for (int n = 1; n <= trunc; ++n) {
    count *= static_cast<std::size_t>(G.order());
    CellTable t(count);
    for (std::size_t x = 0; x < count; ++x) {
      // Lexicographic digits of x in base |G|, mapped digitwise.
      std::size_t rest = x;
      std::size_t weight = 1;
      std::size_t image = 0;
      for (int i = 0; i < n; ++i) {
        const auto digit = rest % static_cast<std::size_t>(G.order());
        rest /= static_cast<std::size_t>(G.order());
        image += static_cast<std::size_t>(hom[digit]) * weight;
        weight *= static_cast<std::size_t>(H.order());
      }
      t[x] = static_cast<CellId>(image);
    }
    F.levels.push_back(std::move(t));
  }
  return F;
}

}  // namespace symspine
