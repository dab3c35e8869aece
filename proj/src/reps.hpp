#pragma once

#include <map>
#include <vector>

#include "rootsystem.hpp"

namespace lie {

// Highest weight in fundamental-weight coordinates, all entries >= 0.
struct DominantWeight {
  SimpleTypeId type;
  IntVec coords;

  static DominantWeight of(SimpleTypeId type, IntVec coords);
  static DominantWeight zero(SimpleTypeId type);
  static DominantWeight fundamental(SimpleTypeId type, int i);  // 1-based node
  static DominantWeight adjoint(SimpleTypeId type);
};

// Weights with multiplicities, keyed by fundamental coordinates.
struct WeightMultiset {
  std::map<IntVec, long long> entries;

  long long total() const;
};

// Linear map from ambient weights to subalgebra weights, one block per
// simple factor of the subalgebra. Blocks act on fundamental coordinates.
struct ProjectionMap {
  std::vector<SimpleTypeId> factors;
  std::vector<RatMat> blocks;  // rank(factor) x rank(ambient)

  void validate(SimpleTypeId ambient) const;
};

constexpr long long kDefaultWeightCap = 10000;

Int weyl_dim(const DominantWeight& w);
Rat casimir2(const DominantWeight& w);   // (lambda, lambda + 2 rho)
Rat rep_index(const DominantWeight& w);  // dim * casimir / dim(g)

// Full weight multiset via Freudenthal recursion on dominant weights
// followed by Weyl-orbit expansion.
WeightMultiset weight_system(const DominantWeight& w,
                             long long cap = kDefaultWeightCap);

// Image multisets under the projection, one per simple factor.
std::vector<WeightMultiset> branch_weights(SimpleTypeId ambient,
                                           const WeightMultiset& w,
                                           const ProjectionMap& p);

// Index of the module with the given weight multiset over the named simple
// type: sum of mult * Q(mu,mu) equals index * rank.
Rat multiset_index(SimpleTypeId type, const WeightMultiset& w);

}  // namespace lie
