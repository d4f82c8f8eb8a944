#pragma once

// The flat quotient and the iterated spiny reflection, plus colimits of
// partial groupoids and partial groups computed through it.

#include <string>
#include <vector>

#include "symspine/colimits.hpp"
#include "symspine/congruence.hpp"
#include "symspine/symset.hpp"

namespace symspine {

struct ReflectReport {
  int iterations = 0;
  /// merges[it][n]: classes merged at level n during iteration it.
  std::vector<std::vector<std::size_t>> merges;
  bool stabilized = false;
  /// Some merge in the last two iterations happened at the top level. A hint
  /// that a larger truncation might identify more cells below it.
  bool boundary_merges = false;

  std::size_t total_merges() const;
};

/// Consecutive edge ids of every cell, computed once per object.
/// edges[n][x] is edge_tuple(X, n, x); levels 0 and 1 hold empty tuples.
using EdgeProfiles = std::vector<std::vector<std::vector<CellId>>>;
EdgeProfiles edge_profiles(const TruncSymSet& X);

/// One flat step on X / C: cells at the same level whose edges agree in the
/// current quotient are merged (using the classes as they stood before the
/// step), then C is saturated. Returns the number of merges per level.
std::vector<std::size_t> flat_step(const TruncSymSet& X, const EdgeProfiles& edges,
                                   Congruence& C);
std::vector<std::size_t> flat_step(const TruncSymSet& X, Congruence& C);

struct ReflectResult {
  TruncSymSet object;
  SymMap projection;
  ReflectReport report;
};

/// Iterates flat_step until a step merges nothing; that last step is counted,
/// so a spiny input takes one iteration. max_iters <= 0 selects the default
/// (total cell count + 1). If the bound is hit, the partial quotient is
/// returned with stabilized = false.
ReflectResult reflect(const TruncSymSet& X, int max_iters = 0);

enum class PartialCategory { pgpd, pgrp };

std::string to_string(PartialCategory c);
PartialCategory partial_category_from_string(const std::string& s);

struct PartialColimitResult {
  TruncSymSet object;
  std::vector<SymMap> legs;
  ReflectReport report;
};

/// Colimit in partial groupoids (reflect the levelwise colimit) or partial
/// groups (reduce, then reflect). Throws InvalidArgument when some diagram
/// object is not spiny, or not reduced for pgrp.
PartialColimitResult colimit_partial(const Diagram& D, PartialCategory category);

}  // namespace symspine
