#pragma once

#include <vector>

#include "linalg.hpp"
#include "types.hpp"

namespace lie {

// Cartan matrix in Bourbaki node numbering, entries a[i][j] = <alpha_i, alpha_j^vee>.
IntMat cartan_matrix(SimpleTypeId type);

// A root system with the Killing form restricted to the Cartan subalgebra
// and its normalization where the longest root has squared length 2.
// Root and weight vectors are integer coordinate vectors: roots in the
// simple-root basis, weights in the fundamental-weight basis. Instances
// are immutable after construction and safe to share across threads.
class RootSystem {
 public:
  explicit RootSystem(SimpleTypeId type);

  SimpleTypeId type() const { return type_; }
  int rank() const { return type_.rank; }
  int dimension() const { return type_.dimension(); }
  const IntMat& cartan() const { return cartan_; }

  const std::vector<IntVec>& roots() const { return roots_; }         // sorted
  const std::vector<IntVec>& positive_roots() const { return pos_; }  // sorted
  const IntVec& highest_root() const { return highest_; }

  // Dual Killing form on the simple-root basis (via the H_alpha identification)
  const RatMat& gram_B() const { return gram_B_; }
  // Normalized form: (2/q) * gram_B with q the largest root B-norm
  const RatMat& gram_Q() const { return gram_Q_; }
  // The normalized form on the fundamental-weight basis
  const RatMat& gram_Q_fund() const { return q_fund_; }
  const Rat& killing_scale() const { return q_; }  // q = max_alpha B(H_a,H_a)

  Rat q_norm(const IntVec& root_coords) const;             // Q(v, v)
  Rat q_pair(const IntVec& a, const IntVec& b) const;      // Q(a, b)
  Rat q_norm_simple(int i) const { return gram_Q_[i][i]; }

  // fundamental coordinates of a vector given in simple-root coordinates
  IntVec to_fundamental(const IntVec& root_coords) const;
  // rational simple-root coordinates of a weight in fundamental coordinates
  RatVec fundamental_to_root(const IntVec& fund) const;

  // Q-pairing of a weight (fundamental coords) against a root (root coords):
  // (mu, alpha) = 1/2 sum_j mu_j c_j Q(alpha_j, alpha_j)
  Rat pair_weight_root(const IntVec& fund, const IntVec& root) const;
  // Q-pairing of two weights in fundamental coordinates
  Rat pair_weights(const IntVec& a, const IntVec& b) const;

  int dual_coxeter() const { return dual_coxeter_; }

  bool is_root(const IntVec& v) const;
  // reflect root coordinates in the hyperplane of an arbitrary root
  IntVec reflect_root(const IntVec& v, const IntVec& root) const;

 private:
  SimpleTypeId type_;
  IntMat cartan_;
  std::vector<IntVec> roots_, pos_;
  IntVec highest_;
  RatMat gram_B_, gram_Q_, q_fund_, fund_to_root_;
  Rat q_;
  int dual_coxeter_;
};

// Shared per-type cache; construction is deterministic so sharing is safe.
const RootSystem& root_system(SimpleTypeId type);

}  // namespace lie
