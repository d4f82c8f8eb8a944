#include "symspine/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "symspine/error.hpp"

namespace symspine {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void expect_format(const json& j, const char* format) {
  if (!j.is_object()) throw ParseError(std::string("expected a ") + format + " object");
  const auto it = j.find("format");
  if (it == j.end() || !it->is_string() || it->get<std::string>() != format) {
    throw ParseError(std::string("expected \"format\": \"") + format + "\"");
  }
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

template <class T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field \"") + what + "\" has the wrong type");
  }
}

template <class T>
T get_field(const json& j, const char* key) {
  return get<T>(field(j, key), key);
}

// Constructor checks on parsed tables surface as parse errors.
template <class F>
auto build(const char* format, F&& make) {
  try {
    return make();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(format) + ": " + e.what());
  }
}

json symmap_json(const SymMap& F) { return {{"format", "sym-map/v1"}, {"levels", F.levels}}; }

SymMap symmap_from(const json& j) {
  expect_format(j, "sym-map/v1");
  return SymMap{get_field<std::vector<CellTable>>(j, "levels")};
}

json symset_json(const TruncSymSet& X) {
  json cells = json::array();
  for (int n = 0; n <= X.trunc(); ++n) cells.push_back(X.names(n));
  return {{"format", "symset/v1"},   {"trunc", X.trunc()},
          {"cells", cells},          {"face", X.faces()},
          {"degeneracy", X.degeneracies()}, {"swap", X.swaps()}};
}

TruncSymSet symset_from(const json& j) {
  expect_format(j, "symset/v1");
  auto trunc = get_field<int>(j, "trunc");
  auto cells = get_field<std::vector<std::vector<std::string>>>(j, "cells");
  auto faces = get_field<std::vector<std::vector<CellTable>>>(j, "face");
  auto degeneracies = get_field<std::vector<std::vector<CellTable>>>(j, "degeneracy");
  auto swaps = get_field<std::vector<std::vector<CellTable>>>(j, "swap");
  return build("symset/v1", [&] {
    return TruncSymSet(trunc, std::move(cells), std::move(faces), std::move(degeneracies),
                       std::move(swaps));
  });
}

}  // namespace

std::string to_json(const TruncSymSet& X) { return symset_json(X).dump(); }

TruncSymSet symset_from_json(const std::string& text) { return symset_from(parse(text)); }

std::string to_json(const FiniteGroup& G) {
  std::vector<Element> flat;
  for (const auto& row : G.table()) flat.insert(flat.end(), row.begin(), row.end());
  return json{{"format", "group/v1"}, {"elements", G.names()}, {"unit", G.unit()}, {"mul", flat}}
      .dump();
}

FiniteGroup group_from_json(const std::string& text) {
  const json j = parse(text);
  expect_format(j, "group/v1");
  auto elements = get_field<std::vector<std::string>>(j, "elements");
  const auto flat = get_field<std::vector<Element>>(j, "mul");
  const std::size_t n = elements.size();
  if (flat.size() != n * n) throw ParseError("group/v1: \"mul\" must have |elements|^2 entries");
  std::vector<std::vector<Element>> mul(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto row = flat.begin() + static_cast<std::ptrdiff_t>(a * n);
    mul[a].assign(row, row + static_cast<std::ptrdiff_t>(n));
  }
  const auto unit = get_field<Element>(j, "unit");
  return build("group/v1",
               [&] { return FiniteGroup(std::move(elements), unit, std::move(mul)); });
}

std::string to_json(const FiniteGroupoid& G) {
  json morphisms = json::array();
  for (const auto& m : G.morphisms()) {
    morphisms.push_back({{"name", m.name}, {"src", m.src}, {"tgt", m.tgt}});
  }
  json comp = json::array();
  for (const auto& [key, h] : G.composition_table()) comp.push_back({key.first, key.second, h});
  return json{{"format", "groupoid/v1"},
              {"objects", G.objects()},
              {"morphisms", morphisms},
              {"comp", comp},
              {"identities", G.identities()}}
      .dump();
}

FiniteGroupoid groupoid_from_json(const std::string& text) {
  const json j = parse(text);
  expect_format(j, "groupoid/v1");
  std::vector<Morphism> morphisms;
  const json& ms = field(j, "morphisms");
  if (!ms.is_array()) throw ParseError("groupoid/v1: \"morphisms\" must be an array");
  for (const auto& m : ms) {
    if (!m.is_object()) throw ParseError("groupoid/v1: morphisms must be objects");
    morphisms.push_back({get_field<std::string>(m, "name"), get_field<int>(m, "src"),
                         get_field<int>(m, "tgt")});
  }
  std::map<std::pair<int, int>, int> comp;
  for (const auto& t : get_field<std::vector<std::vector<int>>>(j, "comp")) {
    if (t.size() != 3) throw ParseError("groupoid/v1: \"comp\" entries are [first, second, composite]");
    comp[{t[0], t[1]}] = t[2];
  }
  auto objects = get_field<std::vector<std::string>>(j, "objects");
  auto identities = get_field<std::vector<int>>(j, "identities");
  return build("groupoid/v1", [&] {
    return FiniteGroupoid(std::move(objects), std::move(morphisms), std::move(comp),
                          std::move(identities));
  });
}

std::string to_json(const SymMap& F) { return symmap_json(F).dump(); }

SymMap symmap_from_json(const std::string& text) { return symmap_from(parse(text)); }

std::string to_json(const Report& r, const std::vector<std::size_t>& cells) {
  json j{{"format", "report/v1"}, {"pass", r.pass}, {"level", r.level}, {"witness", r.witness}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!cells.empty()) j["cells"] = cells;
  return j.dump();
}

std::string to_json(const ReflectReport& r) {
  return json{{"format", "reflect-report/v1"},
              {"iterations", r.iterations},
              {"merges", r.merges},
              {"stabilized", r.stabilized},
              {"boundary_merges", r.boundary_merges}}
      .dump();
}

std::string to_json(const Diagram& D) {
  json objects = json::array();
  for (std::size_t k = 0; k < D.objects.size(); ++k) {
    objects.push_back({{"name", D.object_names[k]}, {"symset", symset_json(D.objects[k])}});
  }
  json arrows = json::array();
  for (const auto& a : D.arrows) {
    arrows.push_back({{"name", a.name},
                      {"source", D.object_names[a.source]},
                      {"target", D.object_names[a.target]},
                      {"map", symmap_json(a.map)}});
  }
  return json{{"format", "diagram/v1"},
              {"shape", to_string(D.shape)},
              {"objects", objects},
              {"arrows", arrows}}
      .dump();
}

Diagram diagram_from_json(const std::string& text, const std::filesystem::path& base) {
  const json j = parse(text);
  expect_format(j, "diagram/v1");
  Diagram D;
  try {
    D.shape = diagram_shape_from_string(get_field<std::string>(j, "shape"));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  const json& objects = field(j, "objects");
  if (!objects.is_array()) throw ParseError("diagram/v1: \"objects\" must be an array");
  auto index_of = [&](const std::string& name) {
    for (std::size_t k = 0; k < D.object_names.size(); ++k) {
      if (D.object_names[k] == name) return k;
    }
    throw ParseError("diagram/v1: unknown object '" + name + "'");
  };
  for (const auto& o : objects) {
    if (!o.is_object()) throw ParseError("diagram/v1: objects must be JSON objects");
    const auto name = get_field<std::string>(o, "name");
    for (const auto& existing : D.object_names) {
      if (existing == name) throw ParseError("diagram/v1: duplicate object '" + name + "'");
    }
    D.object_names.push_back(name);
    if (o.contains("symset")) {
      D.objects.push_back(symset_from(o["symset"]));
    } else if (o.contains("file")) {
      D.objects.push_back(symset_from_json(read_text_file(base / get_field<std::string>(o, "file"))));
    } else {
      throw ParseError("diagram/v1: object '" + name + "' needs \"symset\" or \"file\"");
    }
  }
  const json& arrows = field(j, "arrows");
  if (!arrows.is_array()) throw ParseError("diagram/v1: \"arrows\" must be an array");
  for (const auto& a : arrows) {
    if (!a.is_object()) throw ParseError("diagram/v1: arrows must be JSON objects");
    DiagramArrow arrow;
    arrow.name = get_field<std::string>(a, "name");
    arrow.source = index_of(get_field<std::string>(a, "source"));
    arrow.target = index_of(get_field<std::string>(a, "target"));
    if (a.contains("map")) {
      arrow.map = symmap_from(a["map"]);
    } else if (a.contains("file")) {
      arrow.map = symmap_from_json(read_text_file(base / get_field<std::string>(a, "file")));
    } else {
      throw ParseError("diagram/v1: arrow '" + arrow.name + "' needs \"map\" or \"file\"");
    }
    D.arrows.push_back(std::move(arrow));
  }
  return D;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace symspine
