#include "symspine/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symspine/error.hpp"
#include "symspine/nerve.hpp"

namespace symspine {

namespace {

// Lexicographic digits of x in base b, most significant first.
std::vector<int> digits(std::size_t x, int base, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = count - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::size_t>(base));
    x /= static_cast<std::size_t>(base);
  }
  return out;
}

std::string tuple_string(const std::vector<int>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f[i]);
  }
  return s + ")";
}

}  // namespace

TruncSymSet word_classifier(int m, int trunc) { return reduce(representable(m, trunc)).object; }

SymMap representable_map(const UMap& iota, int trunc) {
  const int m = iota.dom();
  const int n = iota.cod();
  SymMap F;
  std::size_t count = 1;
  for (int k = 0; k <= trunc; ++k) {
    count *= static_cast<std::size_t>(m + 1);
    CellTable t(count);
    for (std::size_t x = 0; x < count; ++x) {
      auto f = digits(x, m + 1, k + 1);
      for (int& v : f) v = iota(v);
      t[x] = representable_index(n, f);
    }
    F.levels.push_back(std::move(t));
  }
  return F;
}

SymMap word_classifier_map(const UMap& iota, int trunc) {
  const auto src = reduce(representable(iota.dom(), trunc));
  const auto tgt = reduce(representable(iota.cod(), trunc));
  return descend(compose_maps(tgt.projection, representable_map(iota, trunc)), src.projection,
                 src.object);
}

std::vector<Element> generated_subgroup(const FiniteGroup& G, const std::vector<Element>& gens) {
  std::set<Element> seen{G.unit()};
  std::vector<Element> frontier{G.unit()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element a : frontier) {
      for (Element g : gens) {
        const Element b = G.mul(a, g);
        if (seen.insert(b).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Element> commutator_subgroup(const FiniteGroup& G, const std::vector<Element>& A,
                                         const std::vector<Element>& B) {
  std::set<Element> gens;
  for (Element a : A) {
    for (Element b : B) gens.insert(G.commutator(a, b));
  }
  return generated_subgroup(G, {gens.begin(), gens.end()});
}

const std::vector<Element>& LowerCentralSeries::term(int i) const {
  if (i < 1) throw InvalidArgument("lower central series terms start at 1");
  const auto k = static_cast<std::size_t>(i - 1);
  return k < terms.size() ? terms[k] : terms.back();
}

LowerCentralSeries lower_central_series(const FiniteGroup& G, const std::vector<Element>& H) {
  LowerCentralSeries s;
  const auto whole = generated_subgroup(G, H);
  s.terms.push_back(whole);
  while (true) {
    auto next = commutator_subgroup(G, s.terms.back(), whole);
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

TruncSymSet b_q(const FiniteGroup& G, int q, int trunc) {
  if (q < 1) throw InvalidArgument("b_q: q must be at least 1");
  const TruncSymSet BG = nerve(G, trunc);
  std::map<std::vector<Element>, bool> by_subgroup;
  std::vector<std::vector<bool>> keep(static_cast<std::size_t>(trunc) + 1);
  for (int n = 0; n <= trunc; ++n) {
    auto& mask = keep[static_cast<std::size_t>(n)];
    mask.resize(BG.size(n));
    for (CellId x = 0; x < BG.size(n); ++x) {
      const auto sub = generated_subgroup(G, digits(x, G.order(), n));
      auto it = by_subgroup.find(sub);
      if (it == by_subgroup.end()) {
        it = by_subgroup.emplace(sub, lower_central_series(G, sub).term(q).size() == 1).first;
      }
      mask[x] = it->second;
    }
  }
  return restrict_to(BG, keep).object;
}

TruncSymSet b_com(const FiniteGroup& G, int trunc) { return b_q(G, 2, trunc); }

TruncSymSet groupoid_to_partial_group(const FiniteGroupoid& Gpd, int trunc) {
  return reduce(nerve(Gpd, trunc)).object;
}

TruncSymSet ladder_example(int cutoff, int trunc) {
  if (cutoff < 1 || trunc < 1) throw InvalidArgument("ladder_example: need K >= 1 and N >= 1");
  auto lands = [&](const std::vector<int>& f) {
    for (int k = 0; k < cutoff; ++k) {
      if (std::all_of(f.begin(), f.end(), [&](int v) { return v == 0 || v == k || v == k + 1; })) {
        return true;
      }
    }
    return false;
  };
  auto consecutive = [](const std::vector<int>& f) {
    const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
    return *hi - *lo <= 1;
  };

  const auto levels = static_cast<std::size_t>(trunc) + 1;
  std::vector<std::vector<std::string>> names(levels);
  // Cell key: (tag, f) with tag 0 for merged cells, 1 for u, 2 for v.
  std::vector<std::vector<std::pair<int, std::vector<int>>>> cells(levels);
  std::vector<std::map<std::pair<int, std::vector<int>>, CellId>> index(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    std::size_t count = 1;
    for (std::size_t i = 0; i <= n; ++i) count *= static_cast<std::size_t>(cutoff + 1);
    for (std::size_t x = 0; x < count; ++x) {
      auto f = digits(x, cutoff + 1, static_cast<int>(n) + 1);
      if (!lands(f)) continue;
      const std::string s = tuple_string(f);
      if (consecutive(f)) {
        cells[n].push_back({0, f});
        names[n].push_back(s);
      } else {
        cells[n].push_back({1, f});
        names[n].push_back("u" + s);
        cells[n].push_back({2, f});
        names[n].push_back("v" + s);
      }
    }
    for (std::size_t x = 0; x < cells[n].size(); ++x) index[n].emplace(cells[n][x], static_cast<CellId>(x));
  }
  auto pull = [&](const UMap& phi, CellId x) -> CellId {
    const auto& [tag, f] = cells[static_cast<std::size_t>(phi.cod())][x];
    std::vector<int> g(static_cast<std::size_t>(phi.dom()) + 1);
    for (int i = 0; i <= phi.dom(); ++i) g[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(phi(i))];
    const int t = consecutive(g) ? 0 : tag;
    return index[static_cast<std::size_t>(phi.dom())].at({t, g});
  };
  return build_from_action(trunc, std::move(names), pull);
}

Diagram counterexample_diagram(int trunc) {
  if (trunc < 1) throw InvalidArgument("counterexample_diagram: truncation must be at least 1");
  const TruncSymSet F1 = word_classifier(1, trunc);
  const TruncSymSet F2 = word_classifier(2, trunc);
  const std::vector<int> first{0, 1};
  const std::vector<int> second{1, 2};
  const SymMap g1 = word_classifier_map(UMap(1, 2, first), trunc);
  const SymMap g2 = word_classifier_map(UMap(1, 2, second), trunc);

  const ColimitResult sum = colimit_sym(coproduct_diagram({"t1", "t2"}, {F1, F1}));
  const auto T = reduce(sum.object);
  const SymMap to_F2 = descend(induced_map(sum, {g1, g2}, F2), T.projection, T.object);
  return pushout_diagram("T", T.object, "A", F2, to_F2, "B", F2, to_F2);
}

Diagram group_pushout_diagram(int trunc) {
  const FiniteGroup Z2 = cyclic_group(2);
  const FiniteGroup Z4 = cyclic_group(4);
  const FiniteGroup V = direct_product(Z2, Z2);
  const Element two = *Z4.find("2");
  const Element ten = *V.find("(1,0)");
  return pushout_diagram("Z2", nerve(Z2, trunc), "Z4", nerve(Z4, trunc),
                         nerve_map(Z2, Z4, {Z4.unit(), two}, trunc), "Z2xZ2", nerve(V, trunc),
                         nerve_map(Z2, V, {V.unit(), ten}, trunc));
}

}  // namespace symspine
