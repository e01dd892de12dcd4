#ifndef NILFIX_MATRIX_HPP
#define NILFIX_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "nilfix/bigint.hpp"
#include "nilfix/polynomial.hpp"

namespace nilfix {

/// Dense matrix over arbitrary-precision integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix&) const = default;

  BigInt trace() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. A zero pivot
/// triggers a row search down the column; an all-zero column short-circuits
/// to determinant 0.
BigInt determinant(IntegerMatrix m);

/// det(identity - m), exactly. m must be square (a 0x0 matrix gives 1).
BigInt det_one_minus(const IntegerMatrix& m);

/// Characteristic polynomial det(x*1 - m) from the power sums tr(m^k) and
/// Newton's identities, exactly.
IntPolynomial characteristic_polynomial(const IntegerMatrix& m);

/// Newton's identities: the monic degree-n polynomial whose root power sums
/// are power_sums[0..n-1] = (t_1, ..., t_n). Intermediate arithmetic is
/// rational; the resulting coefficients must come out integral.
IntPolynomial char_poly_from_power_sums(const std::vector<BigRat>& power_sums);

} // namespace nilfix

#endif
