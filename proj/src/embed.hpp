#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "classical.hpp"
#include "reps.hpp"

namespace lie {

// Index tuple of a semisimple subalgebra: one positive integer per simple
// factor, in the order the mechanism produces its factors.
struct IndexResult {
  std::vector<SimpleTypeId> factors;
  std::vector<long long> values;

  ComplexSemisimpleDesc sub() const { return ComplexSemisimpleDesc::of(factors); }
  std::string str() const;
  bool all_ones() const;
};

struct RegularMech {
  // per factor: the ambient-root coordinate vectors forming its simple roots
  std::vector<std::vector<IntVec>> factor_roots;
};
struct BranchedMech {
  DominantWeight rep;  // faithful representation of the ambient
  ProjectionMap proj;
};
struct PrincipalMech {
  std::vector<int> exponents;
};
struct Embedding;
struct CompositeMech {
  std::vector<Embedding> chain;  // innermost first: h in m1, m1 in m2, ...
};

struct Embedding {
  SimpleTypeId ambient;
  std::variant<RegularMech, BranchedMech, PrincipalMech, CompositeMech> mech;
};

// Index of a regular subalgebra: per factor 2 / Q(theta, theta) evaluated on
// the factor's highest root inside the ambient normalized form.
IndexResult index_regular(SimpleTypeId ambient,
                          const std::vector<std::vector<IntVec>>& factor_roots);

// Index through a faithful representation: per factor, the index of the
// branched module divided by the index of the ambient module.
IndexResult index_branched(SimpleTypeId ambient, const DominantWeight& rep,
                           const ProjectionMap& proj);

// Principal three-dimensional subalgebra from the exponents of the ambient.
long long index_principal_sl2(SimpleTypeId ambient, const std::vector<int>& exponents);

// Factor-wise product along a chain; links after the first must have a
// simple subalgebra matching the previous ambient.
IndexResult index_composite(const std::vector<Embedding>& chain);

IndexResult evaluate(const Embedding& e);

// Convenience: embedding for a classical block spec via the branched route.
Embedding block_embedding(const BlockSpec& spec);

}  // namespace lie
