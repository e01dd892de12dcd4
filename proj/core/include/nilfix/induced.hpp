#ifndef NILFIX_INDUCED_HPP
#define NILFIX_INDUCED_HPP

#include <cstddef>
#include <vector>

#include "nilfix/bigint.hpp"
#include "nilfix/free_lie.hpp"
#include "nilfix/matrix.hpp"

namespace nilfix {

enum class DetMethod { structural, trace };

/// det(1 - M_i) for every graded layer i = 1..c, with layer dimensions and
/// the method that produced the values. Signs are reported as computed;
/// absolute values are taken only at the Reidemeister-number level.
struct LayerDeterminants {
  int r = 0;
  int c = 0;
  std::vector<BigInt> dets;      ///< dets[i-1] = det(1 - M_i)
  std::vector<std::size_t> dims; ///< dims[i-1] = k_i
  DetMethod method = DetMethod::structural;
};

/// Matrix of the endomorphism induced on the degree-`layer` graded piece:
/// column j expands the image of the j-th Hall element of that degree over
/// the layer's basis. Layer 1 returns a copy of `a`.
IntegerMatrix induced_matrix(const FreeLieAlgebra& alg, const IntegerMatrix& a, int layer);

/// Builds every induced matrix and takes exact determinants.
LayerDeterminants layer_dets_structural(const FreeLieAlgebra& alg, const IntegerMatrix& a);

/// Same values by an independent route that never builds M_i: power sums
/// from the free-Lie character identity
///   tr(M_i^k) = (1/i) sum_{d | i} mu(d) * tr(a^{kd})^(i/d),
/// then Newton's identities give the characteristic polynomial of M_i and
/// det(1 - M_i) is its value at 1.
LayerDeterminants layer_dets_trace(const FreeLieAlgebra& alg, const IntegerMatrix& a);

} // namespace nilfix

#endif
