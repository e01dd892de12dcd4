#ifndef NILFIX_FREE_LIE_HPP
#define NILFIX_FREE_LIE_HPP

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <unordered_map>

#include "nilfix/bigint.hpp"
#include "nilfix/hall_basis.hpp"
#include "nilfix/matrix.hpp"

namespace nilfix {

/// Integer linear combination of Hall basis elements sharing one degree.
/// Zero coefficients are never stored; the empty combination is zero and
/// carries degree 0.
class LieCombination {
public:
  LieCombination() = default;

  bool is_zero() const { return terms_.empty(); }
  int degree() const { return degree_; }
  const std::map<int, BigInt>& terms() const { return terms_; }

  /// Accumulate coeff * (basis element `index` of the given degree).
  void add(int index, int degree, const BigInt& coeff);

  LieCombination& operator+=(const LieCombination& other);
  LieCombination& operator*=(const BigInt& scalar);
  LieCombination operator-() const;
  friend LieCombination operator+(LieCombination a, const LieCombination& b) { return a += b; }

  bool operator==(const LieCombination&) const = default;

private:
  int degree_ = 0;
  std::map<int, BigInt> terms_;
};

/// Bracket arithmetic over a fixed Hall basis. Arbitrary brackets of basis
/// elements are rewritten to Hall normal form with antisymmetry and the
/// Jacobi identity:
///   [U,[V1,V2]] = [[U,V1],V2] + [V1,[U,V2]]   when V1 > U.
/// Every same-degree recursive step strictly raises the smaller element of
/// the pair in the basis order, so the rewriting terminates.
///
/// Normal forms of basis pairs are cached; the cache depends only on the
/// basis, never on any endomorphism, so one instance can serve many threads.
class FreeLieAlgebra {
public:
  explicit FreeLieAlgebra(HallBasis basis);

  const HallBasis& basis() const { return basis_; }

  /// Hall normal form of [u,v] for basis element indices. The combined
  /// degree must not exceed the basis degree bound (contract violation
  /// otherwise; callers truncate for nilpotency before calling).
  LieCombination bracket(int u, int v) const;

  /// Bilinear extension of the bracket.
  LieCombination bracket(const LieCombination& p, const LieCombination& q) const;

  /// Image of the basis element under the endomorphism that maps the
  /// generator X_j to sum_k a(k,j) X_k; brackets map to brackets of images.
  LieCombination apply_endomorphism(const IntegerMatrix& a, int index) const;

  /// The basis element itself, as a combination.
  LieCombination unit(int index) const;

private:
  LieCombination bracket_uncached(int u, int v) const;

  HallBasis basis_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint64_t, LieCombination> cache_;
};

} // namespace nilfix

#endif
