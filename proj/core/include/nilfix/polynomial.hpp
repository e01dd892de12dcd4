#ifndef NILFIX_POLYNOMIAL_HPP
#define NILFIX_POLYNOMIAL_HPP

#include <complex>
#include <string>
#include <vector>

#include "nilfix/bigint.hpp"

namespace nilfix {

/// Monic integer polynomial p(x) = x^r + a_{r-1} x^{r-1} + ... + a_1 x + a_0,
/// stored as the coefficient vector (a_0, ..., a_r) with a_r = 1.
class IntPolynomial {
public:
  /// Coefficients low degree first; the last entry must be 1 and the
  /// degree must be at least 1, otherwise std::domain_error.
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt operator()(const BigInt& x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  /// Human-readable form, e.g. "x^2 + 3x - 1".
  std::string to_string() const;
  /// Machine form, low degree first: "-1,3,1".
  std::string coeff_list() const;

  bool operator==(const IntPolynomial&) const = default;

private:
  std::vector<BigInt> coeffs_;
};

} // namespace nilfix

#endif
