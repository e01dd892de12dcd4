#include "nilfix/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace nilfix {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::domain_error("matrix product dimension mismatch");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& aik = at(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += aik * other.at(k, j);
    }
  return out;
}

BigInt IntegerMatrix::trace() const {
  if (!square())
    throw std::domain_error("trace of a non-square matrix");
  BigInt t = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    t += at(i, i);
  return t;
}

BigInt determinant(IntegerMatrix m) {
  if (!m.square())
    throw std::domain_error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;

  // Bareiss: after step k every entry is a (k+1)x(k+1) minor, so the
  // division by the previous pivot is exact.
  int sign = 1;
  BigInt prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot_row = k + 1;
      while (pivot_row < n && m.at(pivot_row, k) == 0)
        ++pivot_row;
      if (pivot_row == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m.at(k, j), m.at(pivot_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev_pivot;
      }
      m.at(i, k) = 0;
    }
    prev_pivot = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

BigInt det_one_minus(const IntegerMatrix& m) {
  if (!m.square())
    throw std::domain_error("det_one_minus of a non-square matrix");
  const std::size_t n = m.rows();
  IntegerMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.at(i, j) = (i == j ? BigInt(1) - m.at(i, j) : -m.at(i, j));
  return determinant(std::move(a));
}

IntPolynomial char_poly_from_power_sums(const std::vector<BigRat>& power_sums) {
  const std::size_t n = power_sums.size();
  // e_m = (1/m) sum_{j=1..m} (-1)^(j-1) e_{m-j} t_j
  std::vector<BigRat> e(n + 1);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    BigRat acc = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      BigRat term = e[m - j] * power_sums[j - 1];
      if (j % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    e[m] = acc / BigRat(static_cast<long>(m));
  }
  // det(x*1 - M) = sum_m (-1)^m e_m x^(n-m), low degree first.
  std::vector<BigInt> coeffs(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    BigRat c = (m % 2 == 0) ? e[m] : -e[m];
    if (denominator(c) != 1)
      throw std::logic_error("power sums are not those of an integer matrix");
    coeffs[n - m] = numerator(c);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial characteristic_polynomial(const IntegerMatrix& m) {
  if (!m.square())
    throw std::domain_error("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    throw std::domain_error("characteristic polynomial of an empty matrix");
  std::vector<BigRat> sums;
  sums.reserve(n);
  IntegerMatrix power = m;
  for (std::size_t k = 1; k <= n; ++k) {
    sums.emplace_back(power.trace());
    if (k < n)
      power = power * m;
  }
  return char_poly_from_power_sums(sums);
}

} // namespace nilfix
