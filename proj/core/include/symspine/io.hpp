#pragma once

// JSON documents: symset/v1, group/v1, groupoid/v1, sym-map/v1, report/v1,
// reflect-report/v1 and diagram/v1. Output has sorted keys and no floats, so
// a document written twice is byte-identical. Malformed input throws
// ParseError.

#include <filesystem>
#include <string>
#include <vector>

#include "symspine/algebra.hpp"
#include "symspine/colimits.hpp"
#include "symspine/reflect.hpp"
#include "symspine/symset.hpp"

namespace symspine {

std::string to_json(const TruncSymSet& X);
TruncSymSet symset_from_json(const std::string& text);

std::string to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const std::string& text);

std::string to_json(const FiniteGroupoid& G);
FiniteGroupoid groupoid_from_json(const std::string& text);

std::string to_json(const SymMap& F);
SymMap symmap_from_json(const std::string& text);

/// report/v1. `cells` (level sizes) is included when non-empty.
std::string to_json(const Report& r, const std::vector<std::size_t>& cells = {});

std::string to_json(const ReflectReport& r);

/// Inline objects are written inline; `base` resolves "file" references.
std::string to_json(const Diagram& D);
Diagram diagram_from_json(const std::string& text, const std::filesystem::path& base = {});

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace symspine
