#pragma once

#include <string>
#include <vector>

#include "reps.hpp"

namespace lie {

// A classical block embedding written in matrix terms, e.g. "so7<so9",
// "sl3+sl3<sl6", "sp2<sp4", "sp2<sl4", "so5<sl5", "so4<so5".
// Numbers are matrix sizes for sl/so and ranks for sp.
struct BlockSpec {
  char ambient_alg;               // 'l' = sl, 'o' = so, 'p' = sp
  int ambient_size;               // n for sl_n / so_n, rank for sp
  std::vector<int> parts;         // sub block sizes (same unit as ambient alg)
  bool cross = false;             // sp<sl or so<sl form inclusion

  static BlockSpec parse(const std::string& text);
  std::string str() const;
};

// Type of the simple factor carried by one sub block; so2 blocks carry none
// and so4 blocks carry two A1 factors.
std::vector<SimpleTypeId> block_factor_types(char alg, int size);

SimpleTypeId block_ambient_type(char alg, int size);

// Defining representation of a classical type given in canonical coordinates.
DominantWeight defining_weight(char alg, int size);

// Weight-level projection of the block embedding, one block per factor.
ProjectionMap block_projection(const BlockSpec& spec);

// Dynkin index of every factor via explicit matrix models: Gram ratio of
// trace forms, fully independent of the root-system machinery.
struct OracleResult {
  std::vector<SimpleTypeId> factors;
  std::vector<long long> values;
};
OracleResult trace_form_oracle(const BlockSpec& spec);
OracleResult trace_form_oracle(const std::string& spec);

// Defining-representation indices used to normalize the oracle.
Rat defining_index(char alg);  // sl: 1, so: 2, sp: 1

}  // namespace lie
