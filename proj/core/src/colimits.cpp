#include "symspine/colimits.hpp"

#include <algorithm>
#include <numeric>

#include "symspine/error.hpp"

namespace symspine {

QuotientResult quotient(const TruncSymSet& X, const Congruence& C) {
  if (C.trunc() != X.trunc()) throw InvalidArgument("quotient: truncation mismatch");
  if (!C.is_saturated(X)) throw InvalidArgument("quotient: congruence is not saturated");
  const int N = X.trunc();
  const auto levels = static_cast<std::size_t>(N) + 1;

  SymMap proj;
  std::vector<std::vector<CellId>> reps(levels);
  std::vector<std::vector<std::string>> names(levels);
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    CellTable cls(X.size(n));
    std::vector<CellId> slot(X.size(n), 0);
    for (CellId x = 0; x < X.size(n); ++x) {
      const CellId r = C.find(n, x);
      if (r == x) {
        slot[x] = static_cast<CellId>(reps[un].size());
        reps[un].push_back(x);
        names[un].push_back(X.name(n, x));
      }
      cls[x] = slot[r];  // r <= x, so its slot is already assigned
    }
    proj.levels.push_back(std::move(cls));
  }

  std::vector<std::vector<CellTable>> faces(levels), degs(levels), swaps(levels);
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (const Generator& g : generators_from(n, N)) {
      CellTable t(reps[un].size());
      for (std::size_t c = 0; c < t.size(); ++c) {
        t[c] = proj(g.target_level(), apply(X, g, reps[un][c]));
      }
      switch (g.kind) {
        case Generator::Kind::face:
          faces[un].push_back(std::move(t));
          break;
        case Generator::Kind::degeneracy:
          degs[un].push_back(std::move(t));
          break;
        case Generator::Kind::swap:
          swaps[un].push_back(std::move(t));
          break;
      }
    }
  }
  return {TruncSymSet(N, std::move(names), std::move(faces), std::move(degs), std::move(swaps)),
          std::move(proj)};
}

std::vector<CellId> fully_degenerate_cells(const TruncSymSet& X, int level) {
  std::vector<CellId> out;
  const UMap to_point = UMap::constant(level, 0, 0);
  for (CellId v = 0; v < X.size(0); ++v) out.push_back(act(X, to_point, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuotientResult reduce(const TruncSymSet& X) {
  if (X.is_empty()) {
    SymMap proj;
    proj.levels.resize(static_cast<std::size_t>(X.trunc()) + 1);
    return {TruncSymSet::terminal(X.trunc()), std::move(proj)};
  }
  Congruence C(X);
  for (int n = 0; n <= X.trunc(); ++n) {
    const auto degenerate = fully_degenerate_cells(X, n);
    for (std::size_t i = 1; i < degenerate.size(); ++i) C.unite(n, degenerate[0], degenerate[i]);
  }
  C.saturate(X);
  return quotient(X, C);
}

TruncSymSet product_sym(const TruncSymSet& X, const TruncSymSet& Y) {
  if (X.trunc() != Y.trunc()) throw InvalidArgument("product_sym: truncation mismatch");
  const int N = X.trunc();
  const auto levels = static_cast<std::size_t>(N) + 1;
  std::vector<std::vector<std::string>> names(levels);
  for (int n = 0; n <= N; ++n) {
    for (CellId x = 0; x < X.size(n); ++x) {
      for (CellId y = 0; y < Y.size(n); ++y) {
        names[static_cast<std::size_t>(n)].push_back("<" + X.name(n, x) + "," + Y.name(n, y) + ">");
      }
    }
  }
  std::vector<std::vector<CellTable>> faces(levels), degs(levels), swaps(levels);
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (const Generator& g : generators_from(n, N)) {
      const auto ty = static_cast<CellId>(Y.size(g.target_level()));
      CellTable t(X.size(n) * Y.size(n));
      for (CellId x = 0; x < X.size(n); ++x) {
        for (CellId y = 0; y < Y.size(n); ++y) {
          t[x * Y.size(n) + y] = apply(X, g, x) * ty + apply(Y, g, y);
        }
      }
      switch (g.kind) {
        case Generator::Kind::face:
          faces[un].push_back(std::move(t));
          break;
        case Generator::Kind::degeneracy:
          degs[un].push_back(std::move(t));
          break;
        case Generator::Kind::swap:
          swaps[un].push_back(std::move(t));
          break;
      }
    }
  }
  return TruncSymSet(N, std::move(names), std::move(faces), std::move(degs), std::move(swaps));
}

// ---------------------------------------------------------------------------
// Diagrams

std::string to_string(DiagramShape shape) {
  switch (shape) {
    case DiagramShape::coproduct:
      return "coproduct";
    case DiagramShape::pushout:
      return "pushout";
    case DiagramShape::coequalizer:
      return "coequalizer";
  }
  return "?";
}

DiagramShape diagram_shape_from_string(const std::string& s) {
  if (s == "coproduct") return DiagramShape::coproduct;
  if (s == "pushout") return DiagramShape::pushout;
  if (s == "coequalizer") return DiagramShape::coequalizer;
  throw InvalidArgument("unknown diagram shape '" + s + "'");
}

int Diagram::trunc() const {
  if (objects.empty()) throw InvalidArgument("diagram has no objects");
  return objects.front().trunc();
}

void Diagram::check() const {
  if (objects.empty()) throw InvalidArgument("diagram has no objects");
  if (object_names.size() != objects.size()) {
    throw InvalidArgument("diagram: one name per object required");
  }
  for (const auto& X : objects) {
    if (X.trunc() != trunc()) throw InvalidArgument("diagram: mismatched truncations");
  }
  for (const auto& a : arrows) {
    if (a.source >= objects.size() || a.target >= objects.size()) {
      throw InvalidArgument("diagram: arrow '" + a.name + "' references a missing object");
    }
  }
  switch (shape) {
    case DiagramShape::coproduct:
      if (!arrows.empty()) throw InvalidArgument("coproduct diagram must not have arrows");
      break;
    case DiagramShape::pushout:
      if (objects.size() != 3 || arrows.size() != 2 || arrows[0].source != arrows[1].source ||
          arrows[0].target == arrows[1].target || arrows[0].target == arrows[0].source ||
          arrows[1].target == arrows[1].source) {
        throw InvalidArgument("pushout diagram needs three objects and two arrows out of one apex");
      }
      break;
    case DiagramShape::coequalizer:
      if (objects.size() != 2 || arrows.size() != 2 || arrows[0].source != arrows[1].source ||
          arrows[0].target != arrows[1].target || arrows[0].source == arrows[0].target) {
        throw InvalidArgument("coequalizer diagram needs two objects and two parallel arrows");
      }
      break;
  }
  for (const auto& a : arrows) {
    const Report r = check_sym_map(a.map, objects[a.source], objects[a.target]);
    if (!r.pass) {
      throw PropertyViolation("diagram arrow '" + a.name + "' is not a map: " + r.detail);
    }
  }
}

ColimitResult colimit_sym(const Diagram& D) {
  D.check();
  const int N = D.trunc();
  const auto levels = static_cast<std::size_t>(N) + 1;

  std::vector<bool> is_source(D.objects.size(), false);
  for (const auto& a : D.arrows) is_source[a.source] = true;
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < D.objects.size(); ++j) {
    if (!is_source[j]) order.push_back(j);
  }
  for (std::size_t j = 0; j < D.objects.size(); ++j) {
    if (is_source[j]) order.push_back(j);
  }

  // offset[j][n]: position of object j's level-n cells in the disjoint union.
  std::vector<std::vector<CellId>> offset(D.objects.size(), std::vector<CellId>(levels, 0));
  std::vector<std::vector<std::string>> names(levels);
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t j : order) {
      offset[j][un] = static_cast<CellId>(names[un].size());
      for (const auto& nm : D.objects[j].names(n)) names[un].push_back(D.object_names[j] + ":" + nm);
    }
  }
  std::vector<std::vector<CellTable>> faces(levels), degs(levels), swaps(levels);
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (const Generator& g : generators_from(n, N)) {
      CellTable t(names[un].size());
      for (std::size_t j : order) {
        const auto& X = D.objects[j];
        for (CellId x = 0; x < X.size(n); ++x) {
          t[offset[j][un] + x] = offset[j][static_cast<std::size_t>(g.target_level())] + apply(X, g, x);
        }
      }
      switch (g.kind) {
        case Generator::Kind::face:
          faces[un].push_back(std::move(t));
          break;
        case Generator::Kind::degeneracy:
          degs[un].push_back(std::move(t));
          break;
        case Generator::Kind::swap:
          swaps[un].push_back(std::move(t));
          break;
      }
    }
  }
  const TruncSymSet sum(N, std::move(names), std::move(faces), std::move(degs), std::move(swaps));

  Congruence C(sum);
  for (const auto& a : D.arrows) {
    for (int n = 0; n <= N; ++n) {
      const auto un = static_cast<std::size_t>(n);
      for (CellId x = 0; x < D.objects[a.source].size(n); ++x) {
        C.unite(n, offset[a.source][un] + x, offset[a.target][un] + a.map(n, x));
      }
    }
  }
  C.saturate(sum);
  auto q = quotient(sum, C);

  ColimitResult out{std::move(q.object), {}};
  for (std::size_t j = 0; j < D.objects.size(); ++j) {
    SymMap leg;
    for (int n = 0; n <= N; ++n) {
      const auto un = static_cast<std::size_t>(n);
      CellTable t(D.objects[j].size(n));
      for (CellId x = 0; x < t.size(); ++x) t[x] = q.projection(n, offset[j][un] + x);
      leg.levels.push_back(std::move(t));
    }
    out.legs.push_back(std::move(leg));
  }
  return out;
}

Diagram coproduct_diagram(std::vector<std::string> names, std::vector<TruncSymSet> objects) {
  Diagram D;
  D.shape = DiagramShape::coproduct;
  D.object_names = std::move(names);
  D.objects = std::move(objects);
  return D;
}

Diagram pushout_diagram(std::string apex_name, TruncSymSet apex, std::string left_name,
                        TruncSymSet left, SymMap to_left, std::string right_name,
                        TruncSymSet right, SymMap to_right) {
  Diagram D;
  D.shape = DiagramShape::pushout;
  D.object_names = {std::move(apex_name), std::move(left_name), std::move(right_name)};
  D.objects = {std::move(apex), std::move(left), std::move(right)};
  D.arrows.push_back({"left", 0, 1, std::move(to_left)});
  D.arrows.push_back({"right", 0, 2, std::move(to_right)});
  return D;
}

Diagram coequalizer_diagram(std::string source_name, TruncSymSet source,
                            std::string target_name, TruncSymSet target, SymMap f, SymMap g) {
  Diagram D;
  D.shape = DiagramShape::coequalizer;
  D.object_names = {std::move(source_name), std::move(target_name)};
  D.objects = {std::move(source), std::move(target)};
  D.arrows.push_back({"f", 0, 1, std::move(f)});
  D.arrows.push_back({"g", 0, 1, std::move(g)});
  return D;
}

SymMap induced_map(const ColimitResult& colimit, const std::vector<SymMap>& cocone,
                   const TruncSymSet& Y) {
  if (cocone.size() != colimit.legs.size()) {
    throw InvalidArgument("induced_map: need one cocone map per diagram object");
  }
  const int N = colimit.object.trunc();
  SymMap G;
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    CellTable t(colimit.object.size(n), static_cast<CellId>(-1));
    for (std::size_t j = 0; j < cocone.size(); ++j) {
      const auto& leg = colimit.legs[j].levels[un];
      for (CellId x = 0; x < leg.size(); ++x) {
        const CellId image = cocone[j](n, x);
        CellId& slot = t[leg[x]];
        if (slot == static_cast<CellId>(-1)) {
          slot = image;
        } else if (slot != image) {
          throw InvalidArgument("induced_map: cocone is not compatible at level " +
                                std::to_string(n));
        }
      }
    }
    for (CellId y : t) {
      if (y == static_cast<CellId>(-1) || y >= Y.size(n)) {
        throw InvalidArgument("induced_map: legs are not jointly surjective");
      }
    }
    G.levels.push_back(std::move(t));
  }
  return G;
}

SymMap descend(const SymMap& F, const SymMap& p, const TruncSymSet& Q) {
  SymMap G;
  for (std::size_t n = 0; n < p.levels.size(); ++n) {
    CellTable t(Q.size(static_cast<int>(n)), static_cast<CellId>(-1));
    for (CellId x = 0; x < p.levels[n].size(); ++x) {
      CellId& slot = t[p.levels[n][x]];
      const CellId image = F.levels[n][x];
      if (slot == static_cast<CellId>(-1)) {
        slot = image;
      } else if (slot != image) {
        throw InvalidArgument("descend: map is not constant on fibres at level " +
                              std::to_string(n));
      }
    }
    if (std::find(t.begin(), t.end(), static_cast<CellId>(-1)) != t.end()) {
      throw InvalidArgument("descend: projection is not surjective");
    }
    G.levels.push_back(std::move(t));
  }
  return G;
}

SubobjectResult restrict_to(const TruncSymSet& X, const std::vector<std::vector<bool>>& keep) {
  const int N = X.trunc();
  const auto levels = static_cast<std::size_t>(N) + 1;
  if (keep.size() != levels) throw InvalidArgument("restrict_to: need one mask per level");
  SymMap inc;
  std::vector<CellTable> slot(levels);
  std::vector<std::vector<std::string>> names(levels);
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (keep[un].size() != X.size(n)) throw InvalidArgument("restrict_to: mask has wrong length");
    slot[un].assign(X.size(n), static_cast<CellId>(-1));
    CellTable t;
    for (CellId x = 0; x < X.size(n); ++x) {
      if (!keep[un][x]) continue;
      slot[un][x] = static_cast<CellId>(t.size());
      t.push_back(x);
      names[un].push_back(X.name(n, x));
    }
    inc.levels.push_back(std::move(t));
  }
  std::vector<std::vector<CellTable>> faces(levels), degs(levels), swaps(levels);
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (const Generator& g : generators_from(n, N)) {
      const auto um = static_cast<std::size_t>(g.target_level());
      CellTable t;
      for (CellId x : inc.levels[un]) {
        const CellId y = apply(X, g, x);
        if (slot[um][y] == static_cast<CellId>(-1)) {
          throw PropertyViolation("restrict_to: selection not closed under " + g.label() +
                                  " ('" + X.name(n, x) + "' maps to '" +
                                  X.name(g.target_level(), y) + "')");
        }
        t.push_back(slot[um][y]);
      }
      switch (g.kind) {
        case Generator::Kind::face:
          faces[un].push_back(std::move(t));
          break;
        case Generator::Kind::degeneracy:
          degs[un].push_back(std::move(t));
          break;
        case Generator::Kind::swap:
          swaps[un].push_back(std::move(t));
          break;
      }
    }
  }
  return {TruncSymSet(N, std::move(names), std::move(faces), std::move(degs), std::move(swaps)),
          std::move(inc)};
}

ColimitResult chain_colimit(const std::vector<TruncSymSet>& objects,
                            const std::vector<SymMap>& maps) {
  if (objects.empty()) throw InvalidArgument("chain_colimit: empty chain");
  if (maps.size() + 1 != objects.size()) {
    throw InvalidArgument("chain_colimit: need one map between consecutive objects");
  }
  ColimitResult acc{objects[0], {identity_map(objects[0])}};
  for (std::size_t i = 0; i + 1 < objects.size(); ++i) {
    // Pushout of acc <- A_i -> A_{i+1}.
    Diagram D = pushout_diagram("a", objects[i], "c", acc.object, acc.legs[i], "n",
                                objects[i + 1], maps[i]);
    ColimitResult step = colimit_sym(D);
    std::vector<SymMap> legs;
    for (const auto& leg : acc.legs) legs.push_back(compose_maps(step.legs[1], leg));
    legs.push_back(step.legs[2]);
    acc = {std::move(step.object), std::move(legs)};
  }
  return acc;
}

}  // namespace symspine
