#include "nilfix/reidemeister.hpp"

#include <cmath>
#include <stdexcept>

#include "nilfix/roots.hpp"

namespace nilfix {

const BigInt& ReidemeisterValue::value() const {
  if (infinite_)
    throw std::logic_error("no finite value: the Reidemeister number is infinite");
  return value_;
}

IntegerMatrix companion_matrix(const IntPolynomial& p) {
  const auto r = static_cast<std::size_t>(p.degree());
  IntegerMatrix c(r, r);
  for (std::size_t i = 0; i + 1 < r; ++i)
    c.at(i + 1, i) = 1;
  for (std::size_t i = 0; i < r; ++i)
    c.at(i, r - 1) = -p.coeff(static_cast<int>(i));
  return c;
}

ReidemeisterEngine::ReidemeisterEngine(int r, int c) : r_(r), c_(c) {
  if (r < 1)
    throw std::domain_error("rank must be >= 1");
  if (c < 1)
    throw std::domain_error("nilpotency class must be >= 1");
  if (r >= 2)
    algebra_.emplace(HallBasis(r, c));
}

const FreeLieAlgebra& ReidemeisterEngine::algebra() const {
  if (!algebra_)
    throw std::logic_error("rank-1 engine has no Hall algebra");
  return *algebra_;
}

ReidemeisterReport ReidemeisterEngine::compute(const IntegerMatrix& a, Mode mode,
                                               DetMethod method) const {
  if (!a.square() || a.rows() != static_cast<std::size_t>(r_))
    throw std::domain_error("matrix must be r x r");
  if (mode == Mode::automorphism) {
    const BigInt det = determinant(a);
    if (det != 1 && det != -1)
      throw std::domain_error("automorphism mode requires |det| = 1");
  }

  LayerDeterminants layers;
  if (r_ == 1) {
    // The free nilpotent group on one generator is Z whatever the class:
    // every layer above the first is trivial.
    layers.r = 1;
    layers.c = c_;
    layers.method = method;
    layers.dims.assign(static_cast<std::size_t>(c_), 0);
    layers.dims[0] = 1;
    layers.dets.assign(static_cast<std::size_t>(c_), BigInt(1));
    layers.dets[0] = BigInt(1) - a.at(0, 0);
  } else {
    layers = method == DetMethod::structural ? layer_dets_structural(*algebra_, a)
                                             : layer_dets_trace(*algebra_, a);
  }

  ReidemeisterReport report;
  report.r = r_;
  report.c = c_;
  report.mode = mode;
  report.input = "matrix " + std::to_string(r_) + "x" + std::to_string(r_);
  report.layers = std::move(layers);

  BigInt product = 1;
  bool infinite = false;
  for (const BigInt& det : report.layers.dets) {
    if (det == 0) {
      infinite = true;
      break;
    }
    product *= abs(det);
  }
  report.value = infinite ? ReidemeisterValue::infinity()
                          : ReidemeisterValue::finite(std::move(product));
  return report;
}

ReidemeisterReport ReidemeisterEngine::compute(const IntPolynomial& p, Mode mode,
                                               DetMethod method) const {
  if (p.degree() != r_)
    throw std::domain_error("polynomial degree must equal the engine rank");
  if (mode == Mode::automorphism && p.coeff(0) != 1 && p.coeff(0) != -1)
    throw std::domain_error("automorphism mode requires constant coefficient +-1");
  ReidemeisterReport report = compute(companion_matrix(p), mode, method);
  report.input = p.to_string();
  return report;
}

ReidemeisterReport reidemeister_number(const IntegerMatrix& a, int c, Mode mode,
                                       DetMethod method) {
  if (!a.square())
    throw std::domain_error("matrix must be square");
  return ReidemeisterEngine(static_cast<int>(a.rows()), c).compute(a, mode, method);
}

ReidemeisterReport reidemeister_number(const IntPolynomial& p, int c, Mode mode,
                                       DetMethod method) {
  return ReidemeisterEngine(p.degree(), c).compute(p, mode, method);
}

IntPolynomial family_even(int m, const BigInt& n) {
  if (m < 2)
    throw std::domain_error("family_even requires m >= 2");
  if (n < 1)
    throw std::domain_error("family_even requires n >= 1");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(2 * m) + 1, BigInt(0));
  coeffs[0] = 1;
  coeffs[static_cast<std::size_t>(m)] = n - 1;
  coeffs[static_cast<std::size_t>(m) + 1] = -1;
  coeffs[static_cast<std::size_t>(2 * m)] = 1;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial family_odd(int m, const BigInt& n) {
  if (m < 2)
    throw std::domain_error("family_odd requires m >= 2");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(2 * m) + 2, BigInt(0));
  coeffs[0] = -1;
  coeffs[static_cast<std::size_t>(m) - 1] = -n;
  coeffs[static_cast<std::size_t>(m)] = n - 1;
  coeffs[static_cast<std::size_t>(m) + 1] = 1 - n;
  coeffs[static_cast<std::size_t>(m) + 2] = n + 1;
  coeffs[static_cast<std::size_t>(2 * m) + 1] = 1;
  return IntPolynomial(std::move(coeffs));
}

int c_offset(int m) {
  if (m < 1)
    throw std::domain_error("c_offset requires m >= 1");
  switch (m % 6) {
  case 4:
    return 0;
  case 3:
  case 5:
    return 1;
  case 0:
  case 2:
    return 3;
  default: // m = 1 mod 6
    return 4;
  }
}

IntPolynomial family_q2(const BigInt& n) { return IntPolynomial({-1, n, 1}); }
IntPolynomial family_q3(const BigInt& n) { return IntPolynomial({1, n - 1, n, 1}); }
IntPolynomial family_r3(const BigInt& n) { return IntPolynomial({1, n - 2, n, 1}); }

namespace {

ReidemeisterValue from_formula(BigInt v) {
  return v == 0 ? ReidemeisterValue::infinity() : ReidemeisterValue::finite(std::move(v));
}

} // namespace

std::optional<ReidemeisterValue> closed_form(int r, int c, const IntPolynomial& p) {
  if ((r != 2 && r != 3) || (c != 2 && c != 3))
    return std::nullopt;
  if (p.degree() != r)
    throw std::domain_error("closed_form: polynomial degree must equal r");
  const BigInt& a0 = p.coeff(0);

  if (r == 2 && c == 2) {
    if (a0 != -1)
      return std::nullopt;
    return from_formula(2 * abs(p.coeff(1)));
  }
  if (r == 3 && c == 2) {
    if (a0 != 1 && a0 != -1)
      return std::nullopt;
    return from_formula(abs(p(BigInt(1)) * p(-a0)));
  }
  if (r == 2 && c == 3) {
    if (a0 != -1)
      return std::nullopt;
    return from_formula(2 * p.coeff(1) * p.coeff(1));
  }
  // r == 3, c == 3
  if (a0 != 1)
    return std::nullopt;
  const BigInt a = 1 + p.coeff(1);
  const BigInt b = 1 + p.coeff(2);
  const BigInt shape = a + b - a * b;
  return from_formula(4 * abs(a * a - b * b) * shape * shape);
}

double float_oracle(const IntPolynomial& p, int c) {
  if (c < 1)
    throw std::domain_error("float_oracle requires c >= 1");
  const auto roots = polynomial_roots(p);
  const int r = p.degree();

  long double product = 1.0L;
  for (const auto& root : roots)
    product *= std::abs(std::complex<long double>(1.0L, 0.0L) -
                        std::complex<long double>(root));
  if (r == 1 || c == 1)
    return static_cast<double>(product);

  // Layers above the first: eigenvalue monomials of the Hall elements.
  const HallBasis basis(r, c);
  std::vector<std::complex<double>> lambda(roots.begin(), roots.end());
  for (int i = 2; i <= c; ++i) {
    for (const HallElement& el : basis.layer(i)) {
      const auto monomial = hall_monomial(basis, el.order_index, lambda);
      product *= std::abs(std::complex<long double>(1.0L, 0.0L) -
                          std::complex<long double>(monomial));
    }
  }
  return static_cast<double>(product);
}

} // namespace nilfix
