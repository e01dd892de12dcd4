#include "nilfix/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace nilfix {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2)
    throw std::domain_error("polynomial must have degree >= 1");
  if (coeffs_.back() != 1)
    throw std::domain_error("polynomial must be monic (leading coefficient 1)");
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::complex<double> IntPolynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + static_cast<double>(*it);
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0 && i != 0)
      continue;
    if (a == 0 && !first)
      continue;
    BigInt mag = abs(a);
    if (first) {
      if (a < 0)
        os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1)
      os << mag.str();
    if (i >= 1)
      os << "x";
    if (i >= 2)
      os << "^" << i;
  }
  if (first)
    os << "0";
  return os.str();
}

std::string IntPolynomial::coeff_list() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i)
      os << ",";
    os << coeffs_[i].str();
  }
  return os.str();
}

} // namespace nilfix
