#include "cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "symspine/algebra.hpp"
#include "symspine/colimits.hpp"
#include "symspine/constructions.hpp"
#include "symspine/error.hpp"
#include "symspine/homsearch.hpp"
#include "symspine/io.hpp"
#include "symspine/nerve.hpp"
#include "symspine/reflect.hpp"
#include "symspine/spiny.hpp"

namespace symspine::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::string input;
  std::string second;
  std::string output;
  std::string report;
  std::string spines = "standard";
  std::string category;
  std::string kind;
  std::vector<std::string> args;
  int trunc = 3;
  int max_iters = 0;
  bool reduce = false;
  bool count_only = false;
};

void emit(const std::string& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << doc << '\n';
  } else {
    write_text_file(path, doc);
  }
}

std::string summary(const TruncSymSet& X, const ReflectReport* report = nullptr) {
  json j{{"format", "summary/v1"}, {"cells", X.level_sizes()}};
  if (report) j["reflect"] = json::parse(to_json(*report));
  return j.dump();
}

// Writes X to -o (or stdout); with -o a summary goes to stdout instead.
void emit_symset(const TruncSymSet& X, const Options& o, std::ostream& out,
                 const ReflectReport* report = nullptr) {
  emit(to_json(X), o.output, out);
  if (!o.output.empty()) out << summary(X, report) << '\n';
}

TruncSymSet load_symset(const std::string& path) { return symset_from_json(read_text_file(path)); }

FiniteGroup load_group(const std::string& spec) {
  if (fs::exists(spec)) return group_from_json(read_text_file(spec));
  return group_by_name(spec);
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument(std::string(what) + " must be an integer, got '" + s + "'");
}

void need_args(const Options& o, std::size_t n, const char* usage) {
  if (o.args.size() != n) throw InvalidArgument(std::string("usage: construct ") + usage);
}

int cmd_validate(const Options& o, std::ostream& out) {
  const TruncSymSet X = load_symset(o.input);
  const Report r = validate(X);
  out << to_json(r, X.level_sizes()) << '\n';
  return r.pass ? kOk : kPropertyFalse;
}

int cmd_spiny(const Options& o, std::ostream& out) {
  const TruncSymSet X = load_symset(o.input);
  Report r;
  if (o.spines == "standard") {
    r = is_spiny(X);
  } else if (o.spines.rfind("random:", 0) == 0) {
    const std::string rest = o.spines.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InvalidArgument("--spines random:SEED:COUNT");
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(rest.substr(0, colon));
    } catch (const std::exception&) {
      throw InvalidArgument("--spines: bad seed");
    }
    r = is_spiny_random(X, seed, parse_int(rest.substr(colon + 1), "--spines count"));
  } else {
    throw InvalidArgument("--spines must be 'standard' or 'random:SEED:COUNT'");
  }
  out << to_json(r, X.level_sizes()) << '\n';
  return r.pass ? kOk : kPropertyFalse;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  emit_symset(reduce(load_symset(o.input)).object, o, out);
  return kOk;
}

int cmd_reflect(const Options& o, std::ostream& out) {
  const ReflectResult r = reflect(load_symset(o.input), o.max_iters);
  if (!o.report.empty()) write_text_file(o.report, to_json(r.report));
  emit_symset(r.object, o, out, &r.report);
  return r.report.stabilized ? kOk : kCapExceeded;
}

int cmd_colimit(const Options& o, std::ostream& out) {
  const Diagram D = diagram_from_json(read_text_file(o.input), fs::path(o.input).parent_path());
  if (o.category == "sym") {
    emit_symset(colimit_sym(D).object, o, out);
    return kOk;
  }
  const auto r = colimit_partial(D, partial_category_from_string(o.category));
  emit_symset(r.object, o, out, &r.report);
  return r.report.stabilized ? kOk : kCapExceeded;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const int N = o.trunc;
  if (N < 0) throw InvalidArgument("--trunc must be non-negative");
  const std::string& k = o.kind;
  if (k == "counterexample" || k == "group-pushout") {
    need_args(o, 0, (k + " --trunc N").c_str());
    const Diagram D = k == "counterexample" ? counterexample_diagram(N) : group_pushout_diagram(N);
    emit(to_json(D), o.output, out);
    return kOk;
  }
  TruncSymSet X;
  if (k == "bg") {
    need_args(o, 1, "bg GROUP");
    X = nerve(load_group(o.args[0]), N);
  } else if (k == "groupoid") {
    need_args(o, 1, "groupoid FILE [--reduce]");
    const FiniteGroupoid G = groupoid_from_json(read_text_file(o.args[0]));
    X = o.reduce ? groupoid_to_partial_group(G, N) : nerve(G, N);
  } else if (k == "bq") {
    need_args(o, 2, "bq GROUP Q");
    X = b_q(load_group(o.args[0]), parse_int(o.args[1], "Q"), N);
  } else if (k == "bcom") {
    need_args(o, 1, "bcom GROUP");
    X = b_com(load_group(o.args[0]), N);
  } else if (k == "word-classifier") {
    need_args(o, 1, "word-classifier M");
    const int m = parse_int(o.args[0], "M");
    if (m < 0) throw InvalidArgument("M must be non-negative");
    X = word_classifier(m, N);
  } else if (k == "chaotic") {
    need_args(o, 1, "chaotic K");
    X = nerve(chaotic_groupoid(parse_int(o.args[0], "K")), N);
  } else if (k == "ladder") {
    need_args(o, 1, "ladder K");
    X = ladder_example(parse_int(o.args[0], "K"), N);
  } else {
    throw InvalidArgument("unknown construction '" + k + "'");
  }
  emit_symset(X, o, out);
  return kOk;
}

int cmd_homs(const Options& o, std::ostream& out) {
  const TruncSymSet X = load_symset(o.input);
  const TruncSymSet Y = load_symset(o.second);
  const auto homs = enumerate_homs(X, Y);
  json j{{"format", "hom-list/v1"}, {"count", homs.size()}};
  if (!o.count_only) {
    json maps = json::array();
    for (const auto& F : homs) maps.push_back(json::parse(to_json(F)));
    j["maps"] = maps;
  }
  emit(j.dump(), o.output, out);
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite truncated symmetric sets and partial groups", "symspine"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "Check the generator relations of a symset");
  validate_cmd->add_option("file", o.input, "symset/v1 document")->required();

  auto* spiny_cmd = app.add_subcommand("spiny", "Check injectivity along spines");
  spiny_cmd->add_option("file", o.input, "symset/v1 document")->required();
  spiny_cmd->add_option("--spines", o.spines, "standard | random:SEED:COUNT");

  auto* reduce_cmd = app.add_subcommand("reduce", "Collapse fully degenerate cells");
  reduce_cmd->add_option("file", o.input, "symset/v1 document")->required();
  reduce_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* reflect_cmd = app.add_subcommand("reflect", "Spiny reflection");
  reflect_cmd->add_option("file", o.input, "symset/v1 document")->required();
  reflect_cmd->add_option("--max-iters", o.max_iters, "iteration bound (default: cells + 1)");
  reflect_cmd->add_option("-o,--output", o.output, "output file (default stdout)");
  reflect_cmd->add_option("--report", o.report, "write reflect-report/v1 here");

  auto* colimit_cmd = app.add_subcommand("colimit", "Colimit of a diagram/v1 document");
  colimit_cmd->add_option("diagram", o.input, "diagram/v1 document")->required();
  colimit_cmd->add_option("--category", o.category, "sym | pgpd | pgrp")
      ->required()
      ->check(CLI::IsMember({"sym", "pgpd", "pgrp"}));
  colimit_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* construct_cmd = app.add_subcommand("construct", "Build a standard object");
  construct_cmd
      ->add_option("kind", o.kind,
                   "bg | groupoid | bq | bcom | word-classifier | chaotic | ladder | "
                   "counterexample | group-pushout")
      ->required();
  construct_cmd->add_option("args", o.args, "kind-specific arguments");
  construct_cmd->add_option("--trunc", o.trunc, "truncation level")->capture_default_str();
  construct_cmd->add_flag("--reduce", o.reduce, "reduce a groupoid nerve");
  construct_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* homs_cmd = app.add_subcommand("homs", "Enumerate maps SRC -> DST");
  homs_cmd->add_option("src", o.input, "symset/v1 document")->required();
  homs_cmd->add_option("dst", o.second, "symset/v1 document")->required();
  homs_cmd->add_flag("--count-only", o.count_only, "print only the count");
  homs_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

  std::vector<const char*> argv{"symspine"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kMalformedInput;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (spiny_cmd->parsed()) return cmd_spiny(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    if (reflect_cmd->parsed()) return cmd_reflect(o, out);
    if (colimit_cmd->parsed()) return cmd_colimit(o, out);
    if (construct_cmd->parsed()) return cmd_construct(o, out);
    if (homs_cmd->parsed()) return cmd_homs(o, out);
  } catch (const SearchCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const PropertyViolation& e) {
    err << "error: " << e.what() << '\n';
    return kPropertyFalse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace symspine::cli
