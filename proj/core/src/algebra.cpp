#include "symspine/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "symspine/error.hpp"

namespace symspine {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, Element unit,
                         std::vector<std::vector<Element>> table)
    : names_(std::move(elements)), unit_(unit), mul_(std::move(table)) {
  const int n = order();
  if (n == 0) throw InvalidArgument("group: no elements");
  if (unit_ < 0 || unit_ >= n) throw InvalidArgument("group: unit out of range");
  if (static_cast<int>(mul_.size()) != n) throw InvalidArgument("group: table has wrong size");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("group: table row has wrong size");
    for (Element v : row) {
      if (v < 0 || v >= n) throw InvalidArgument("group: table entry out of range");
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (mul(unit_, a) != a || mul(a, unit_) != a) {
      throw InvalidArgument("group: unit law fails for '" + name(a) + "'");
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw InvalidArgument("group: associativity fails for (" + name(a) + "," + name(b) +
                                "," + name(c) + ")");
        }
      }
    }
  }
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (mul(a, b) == unit_ && mul(b, a) == unit_) inv_[static_cast<std::size_t>(a)] = b;
    }
    if (inv_[static_cast<std::size_t>(a)] < 0) {
      throw InvalidArgument("group: '" + name(a) + "' has no inverse");
    }
  }
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("group: duplicate element names");
  }
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

std::optional<Element> FiniteGroup::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a) {
    for (Element b = 0; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidArgument("cyclic_group: order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<Element>> mul(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a)].push_back((a + b) % n);
  }
  return FiniteGroup(std::move(names), 0, std::move(mul));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw InvalidArgument("symmetric_group: degree must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += std::to_string(v + 1);
    names.push_back(s);
  }
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  // (a*b)(i) = a(b(i)): apply b first.
  std::vector<std::vector<Element>> mul(perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      }
      mul[a].push_back(index_of(c));
    }
  }
  return FiniteGroup(std::move(names), 0, std::move(mul));
}

FiniteGroup dihedral_group(int order) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral_group: order must be even");
  const int k = order / 2;
  // r^i for 0 <= i < k, s r^i for k <= index < 2k; s r = r^{-1} s.
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("r" + std::to_string(i));
  for (int i = 0; i < k; ++i) names.push_back("s" + std::to_string(i));
  auto mul_elem = [k](int a, int b) {
    const bool ra = a < k;
    const bool rb = b < k;
    const int i = a % k;
    const int j = b % k;
    if (ra && rb) return (i + j) % k;                 // r^i r^j
    if (ra && !rb) return k + ((j - i) % k + k) % k;  // r^i s r^j = s r^{j-i}
    if (!ra && rb) return k + (i + j) % k;            // s r^i r^j
    return ((j - i) % k + k) % k;                     // s r^i s r^j = r^{j-i}
  };
  std::vector<std::vector<Element>> mul(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) mul[static_cast<std::size_t>(a)].push_back(mul_elem(a, b));
  }
  return FiniteGroup(std::move(names), 0, std::move(mul));
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  std::vector<std::string> names;
  const int h = H.order();
  for (Element a = 0; a < G.order(); ++a) {
    for (Element b = 0; b < h; ++b) names.push_back("(" + G.name(a) + "," + H.name(b) + ")");
  }
  std::vector<std::vector<Element>> mul(names.size());
  for (std::size_t x = 0; x < names.size(); ++x) {
    for (std::size_t y = 0; y < names.size(); ++y) {
      const auto a = static_cast<Element>(x) / h;
      const auto b = static_cast<Element>(x) % h;
      const auto c = static_cast<Element>(y) / h;
      const auto d = static_cast<Element>(y) % h;
      mul[x].push_back(G.mul(a, c) * h + H.mul(b, d));
    }
  }
  return FiniteGroup(std::move(names), G.unit() * h + H.unit(), std::move(mul));
}

FiniteGroup group_by_name(const std::string& spec) {
  const auto x = spec.find('x');
  if (x != std::string::npos) {
    return direct_product(group_by_name(spec.substr(0, x)), group_by_name(spec.substr(x + 1)));
  }
  static const std::regex pattern("([ZSD])([0-9]+)");
  std::smatch m;
  if (spec == "1") return cyclic_group(1);
  if (!std::regex_match(spec, m, pattern)) {
    throw InvalidArgument("unknown group '" + spec + "' (expected e.g. Z4, S3, D8, Z2xZ2)");
  }
  const int n = std::stoi(m[2].str());
  switch (m[1].str()[0]) {
    case 'Z':
      return cyclic_group(n);
    case 'S':
      return symmetric_group(n);
    default:
      return dihedral_group(n);
  }
}

// ---------------------------------------------------------------------------

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::map<std::pair<int, int>, int> comp,
                               std::vector<int> identities)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      comp_(std::move(comp)),
      identities_(std::move(identities)) {
  const int no = object_count();
  const int nm = morphism_count();
  if (no == 0) throw InvalidArgument("groupoid: no objects");
  for (const auto& f : morphisms_) {
    if (f.src < 0 || f.src >= no || f.tgt < 0 || f.tgt >= no) {
      throw InvalidArgument("groupoid: morphism '" + f.name + "' has an unknown endpoint");
    }
  }
  if (static_cast<int>(identities_.size()) != no) {
    throw InvalidArgument("groupoid: need one identity per object");
  }
  for (int x = 0; x < no; ++x) {
    const int id = identities_[static_cast<std::size_t>(x)];
    if (id < 0 || id >= nm || src(id) != x || tgt(id) != x) {
      throw InvalidArgument("groupoid: identity of '" + object_name(x) + "' is not a loop on it");
    }
  }
  for (const auto& [key, h] : comp_) {
    const auto [f, g] = key;
    if (f < 0 || f >= nm || g < 0 || g >= nm || h < 0 || h >= nm) {
      throw InvalidArgument("groupoid: composition entry out of range");
    }
    if (tgt(f) != src(g)) throw InvalidArgument("groupoid: composition of non-composable pair");
    if (src(h) != src(f) || tgt(h) != tgt(g)) {
      throw InvalidArgument("groupoid: composite has wrong endpoints");
    }
  }
  out_.resize(static_cast<std::size_t>(no));
  for (int f = 0; f < nm; ++f) out_[static_cast<std::size_t>(src(f))].push_back(f);
  for (int f = 0; f < nm; ++f) {
    for (int g : out_[static_cast<std::size_t>(tgt(f))]) {
      if (!comp_.contains({f, g})) {
        throw InvalidArgument("groupoid: composite of '" + morphism(f).name + "' then '" +
                              morphism(g).name + "' is missing");
      }
    }
    if (compose(identity(src(f)), f) != f || compose(f, identity(tgt(f))) != f) {
      throw InvalidArgument("groupoid: unit law fails for '" + morphism(f).name + "'");
    }
  }
  for (int f = 0; f < nm; ++f) {
    for (int g : out_[static_cast<std::size_t>(tgt(f))]) {
      for (int h : out_[static_cast<std::size_t>(tgt(g))]) {
        if (compose(compose(f, g), h) != compose(f, compose(g, h))) {
          throw InvalidArgument("groupoid: associativity fails");
        }
      }
    }
  }
  inv_.assign(static_cast<std::size_t>(nm), -1);
  for (int f = 0; f < nm; ++f) {
    for (int g : out_[static_cast<std::size_t>(tgt(f))]) {
      if (tgt(g) == src(f) && compose(f, g) == identity(src(f)) &&
          compose(g, f) == identity(tgt(f))) {
        inv_[static_cast<std::size_t>(f)] = g;
      }
    }
    if (inv_[static_cast<std::size_t>(f)] < 0) {
      throw InvalidArgument("groupoid: '" + morphism(f).name + "' is not invertible");
    }
  }
}

int FiniteGroupoid::compose(int f, int g) const {
  auto it = comp_.find({f, g});
  if (it == comp_.end()) {
    throw InvalidArgument("groupoid: '" + morphism(f).name + "' and '" + morphism(g).name +
                          "' are not composable");
  }
  return it->second;
}

FiniteGroupoid groupoid_of_group(const FiniteGroup& G) {
  std::vector<Morphism> ms;
  for (Element a = 0; a < G.order(); ++a) ms.push_back({G.name(a), 0, 0});
  std::map<std::pair<int, int>, int> comp;
  for (Element f = 0; f < G.order(); ++f) {
    for (Element g = 0; g < G.order(); ++g) comp[{f, g}] = G.mul(g, f);  // g after f
  }
  return FiniteGroupoid({"*"}, std::move(ms), std::move(comp), {G.unit()});
}

FiniteGroupoid chaotic_groupoid(int objects) {
  if (objects < 1) throw InvalidArgument("chaotic_groupoid: need at least one object");
  std::vector<std::string> obs;
  std::vector<Morphism> ms;
  for (int i = 0; i < objects; ++i) obs.push_back(std::to_string(i));
  for (int i = 0; i < objects; ++i) {
    for (int j = 0; j < objects; ++j) ms.push_back({std::to_string(i) + ">" + std::to_string(j), i, j});
  }
  auto idx = [objects](int i, int j) { return i * objects + j; };
  std::map<std::pair<int, int>, int> comp;
  for (int i = 0; i < objects; ++i) {
    for (int j = 0; j < objects; ++j) {
      for (int k = 0; k < objects; ++k) comp[{idx(i, j), idx(j, k)}] = idx(i, k);
    }
  }
  std::vector<int> ids;
  for (int i = 0; i < objects; ++i) ids.push_back(idx(i, i));
  return FiniteGroupoid(std::move(obs), std::move(ms), std::move(comp), std::move(ids));
}

FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts) {
  std::vector<std::string> obs;
  std::vector<Morphism> ms;
  std::map<std::pair<int, int>, int> comp;
  std::vector<int> ids;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& G = parts[p];
    const std::string prefix = std::to_string(p) + ":";
    const int ob0 = static_cast<int>(obs.size());
    const int m0 = static_cast<int>(ms.size());
    for (const auto& o : G.objects()) obs.push_back(prefix + o);
    for (const auto& f : G.morphisms()) ms.push_back({prefix + f.name, f.src + ob0, f.tgt + ob0});
    for (const auto& [key, h] : G.composition_table()) {
      comp[{key.first + m0, key.second + m0}] = h + m0;
    }
    for (int id : G.identities()) ids.push_back(id + m0);
  }
  return FiniteGroupoid(std::move(obs), std::move(ms), std::move(comp), std::move(ids));
}

}  // namespace symspine
