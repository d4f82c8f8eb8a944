#pragma once

// Levelwise limits and colimits of symmetric sets, quotients by congruences,
// and the reduction functor.

#include <string>
#include <vector>

#include "symspine/congruence.hpp"
#include "symspine/symset.hpp"

namespace symspine {

struct QuotientResult {
  TruncSymSet object;
  SymMap projection;
};

/// Cells of the result are the classes of C in order of their least member,
/// named after that member. Throws InvalidArgument if C is not saturated.
QuotientResult quotient(const TruncSymSet& X, const Congruence& C);

/// The reduction: identifies all fully degenerate cells (pullbacks of
/// vertices along [n] -> [0]) at every level. The empty object reduces to the
/// terminal one.
QuotientResult reduce(const TruncSymSet& X);

/// Fully degenerate cells at `level`, i.e. images of X_0 under [level] -> [0].
std::vector<CellId> fully_degenerate_cells(const TruncSymSet& X, int level);

/// Levelwise cartesian product, cells named "<x,y>".
TruncSymSet product_sym(const TruncSymSet& X, const TruncSymSet& Y);

enum class DiagramShape { coproduct, pushout, coequalizer };

std::string to_string(DiagramShape shape);
DiagramShape diagram_shape_from_string(const std::string& s);

struct DiagramArrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  SymMap map;
};

/// A finite diagram of symmetric sets of one truncation.
///
/// coproduct: any number of objects, no arrows. pushout: exactly two arrows
/// out of one apex into the two other objects. coequalizer: two objects and
/// two parallel arrows.
struct Diagram {
  DiagramShape shape = DiagramShape::coproduct;
  std::vector<std::string> object_names;
  std::vector<TruncSymSet> objects;
  std::vector<DiagramArrow> arrows;

  /// Shape arity, truncation agreement and that every arrow is a map.
  void check() const;
  int trunc() const;
};

struct ColimitResult {
  TruncSymSet object;
  std::vector<SymMap> legs;  // one per diagram object
};

/// Levelwise colimit: disjoint union of the objects modulo x ~ f(x) for every
/// arrow f. Objects that are not the source of an arrow come first in the
/// disjoint union, so class representatives are taken from them. Cells are
/// named "object:cell".
ColimitResult colimit_sym(const Diagram& D);

Diagram coproduct_diagram(std::vector<std::string> names, std::vector<TruncSymSet> objects);
Diagram pushout_diagram(std::string apex_name, TruncSymSet apex, std::string left_name,
                        TruncSymSet left, SymMap to_left, std::string right_name,
                        TruncSymSet right, SymMap to_right);
Diagram coequalizer_diagram(std::string source_name, TruncSymSet source,
                            std::string target_name, TruncSymSet target, SymMap f, SymMap g);

/// The map colim D -> Y induced by a cocone (one map D_j -> Y per object).
/// Throws InvalidArgument when the cocone is not compatible with the legs.
SymMap induced_map(const ColimitResult& colimit, const std::vector<SymMap>& cocone,
                   const TruncSymSet& Y);

/// For F : X -> Y constant on the fibres of the surjection p : X -> Q,
/// returns the unique G : Q -> Y with G o p = F.
SymMap descend(const SymMap& F, const SymMap& p, const TruncSymSet& Q);

struct SubobjectResult {
  TruncSymSet object;
  SymMap inclusion;
};

/// The sub-symmetric-set on the cells with keep[n][x] set. Throws
/// PropertyViolation if the selection is not closed under the action.
SubobjectResult restrict_to(const TruncSymSet& X, const std::vector<std::vector<bool>>& keep);

/// Colimit of a chain A_0 -> A_1 -> ... -> A_k computed as iterated pushouts.
/// maps[i] : A_i -> A_{i+1}.
ColimitResult chain_colimit(const std::vector<TruncSymSet>& objects,
                            const std::vector<SymMap>& maps);

}  // namespace symspine
