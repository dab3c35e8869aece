#pragma once

#include <string>
#include <utility>
#include <vector>

#include "embed.hpp"

namespace lie {

// Dynkin diagram extended by the lowest root. Node 0 is the affine node
// (mark 1); node i >= 1 carries simple root alpha_i with the coefficient of
// the highest root as its mark.
struct ExtendedDiagram {
  struct Edge {
    int i, j;
    int aij, aji;  // Cartan integers <n_i, n_j^vee>, <n_j, n_i^vee>
  };
  SimpleTypeId type;
  std::vector<IntVec> nodes;  // root coordinate vectors
  std::vector<int> marks;
  std::vector<Edge> edges;
};

ExtendedDiagram extended_diagram(SimpleTypeId type);

// Identify the connected components of a set of diagram nodes given as
// ambient root vectors; returns each component's canonical type together
// with its nodes, sorted canonically.
std::vector<std::pair<SimpleTypeId, std::vector<IntVec>>> diagram_components(
    const RootSystem& ambient, const std::vector<IntVec>& nodes);

// Single connected component; fails on a disconnected or invalid diagram.
std::pair<SimpleTypeId, std::vector<IntVec>> diagram_component_type(
    const RootSystem& ambient, const std::vector<IntVec>& nodes);

ComplexSemisimpleDesc classify_subdiagram(const RootSystem& ambient,
                                          const std::vector<IntVec>& nodes);

// One maximal regular subalgebra: semisimple from an extended-diagram
// deletion (center_dim 0) or reductive from a mark-1 plain deletion
// (center_dim 1, the one-dimensional center is implicit).
struct RegularSubalgebraResult {
  ComplexSemisimpleDesc sub;
  std::vector<std::vector<IntVec>> factor_roots;  // aligned with sub.factors
  IndexResult index;
  int center_dim = 0;
  std::string origin;  // "ext-del:k" or "levi:k"
};

// Borel-de Siebenthal enumeration: extended-diagram single-node deletions at
// prime marks > 1, plus the plain-diagram deletions at mark-1 nodes (the
// Levi subalgebras not absorbed by any semisimple result). Deterministic,
// duplicate-free, canonically sorted.
std::vector<RegularSubalgebraResult> enumerate_maximal_regular(SimpleTypeId type);

// All extended-diagram deletions including composite marks; non-maximal
// results are only reachable through this entry point.
std::vector<RegularSubalgebraResult> enumerate_extended_deletions(
    SimpleTypeId type, bool include_composite_marks);

}  // namespace lie
