#include "nilfix/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nilfix {

namespace {

// Polynomials over exact rationals, low degree first, for the squarefree
// split. All inputs here are monic and stay monic.
using RatPoly = std::vector<BigRat>;

int deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i)
    out.push_back(p[i] * BigRat(static_cast<long>(i)));
  if (out.empty())
    out.push_back(BigRat(0));
  return out;
}

void trim(RatPoly& p) {
  while (p.size() > 1 && p.back() == 0)
    p.pop_back();
}

RatPoly make_monic(RatPoly p) {
  trim(p);
  const BigRat lead = p.back();
  if (lead != 1)
    for (auto& c : p)
      c /= lead;
  return p;
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  while (deg(a) >= deg(b) && !(a.size() == 1 && a[0] == 0)) {
    const BigRat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
    if (a.size() == 1 && a[0] == 0)
      break;
  }
  return a;
}

RatPoly quotient(RatPoly a, const RatPoly& b) {
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, BigRat(0));
  while (deg(a) >= deg(b) && !(a.size() == 1 && a[0] == 0)) {
    const BigRat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

bool is_constant(const RatPoly& p) { return p.size() == 1; }

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

// Yun's squarefree decomposition of a monic polynomial: p = prod a_i^i with
// each a_i squarefree. Returns (factor, multiplicity) pairs, constants
// dropped.
std::vector<std::pair<RatPoly, int>> squarefree_split(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  if (deg(p) < 1)
    return out;
  const RatPoly dp = derivative(p);
  RatPoly g = poly_gcd(p, dp);
  if (is_constant(g)) {
    out.emplace_back(p, 1);
    return out;
  }
  RatPoly b = quotient(p, g);
  RatPoly c = quotient(dp, g);
  int i = 1;
  while (!is_constant(b)) {
    RatPoly d = c;
    RatPoly db = derivative(b);
    for (std::size_t k = 0; k < d.size(); ++k)
      d[k] -= k < db.size() ? db[k] : BigRat(0);
    trim(d);
    RatPoly a = poly_gcd(b, d);
    if (!is_constant(a))
      out.emplace_back(a, i);
    b = quotient(b, a);
    c = quotient(d, a);
    ++i;
  }
  return out;
}

// Durand-Kerner on a monic polynomial with simple roots.
std::vector<std::complex<double>> durand_kerner(const std::vector<double>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n == 1)
    return {std::complex<double>(-coeffs[0], 0.0)};

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 1.0;
    for (int i = n - 1; i >= 0; --i)
      acc = acc * z + coeffs[static_cast<std::size_t>(i)];
    return acc;
  };

  double radius = 0.0;
  for (int i = 0; i < n; ++i)
    radius = std::max(radius, std::abs(coeffs[static_cast<std::size_t>(i)]));
  radius = 1.0 + radius; // Cauchy bound on the root magnitudes

  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * (j + 0.25) / n;
    z[static_cast<std::size_t>(j)] = std::polar(radius, angle);
  }

  constexpr int kMaxIterations = 1000;
  bool converged = false;
  for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
    double max_step = 0.0;
    for (int j = 0; j < n; ++j) {
      std::complex<double> denom = 1.0;
      for (int k = 0; k < n; ++k) {
        if (k == j)
          continue;
        std::complex<double> diff = z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(k)];
        if (std::abs(diff) < 1e-300)
          diff = std::complex<double>(1e-12, 1e-12);
        denom *= diff;
      }
      const std::complex<double> step = eval(z[static_cast<std::size_t>(j)]) / denom;
      z[static_cast<std::size_t>(j)] -= step;
      max_step = std::max(max_step,
                          std::abs(step) / std::max(1.0, std::abs(z[static_cast<std::size_t>(j)])));
    }
    converged = max_step < 1e-14;
  }

  // Relative residual gate: |p(z)| against the coefficient magnitude at z.
  for (int j = 0; j < n; ++j) {
    const std::complex<double> at = z[static_cast<std::size_t>(j)];
    double scale = std::pow(std::abs(at), n);
    double power = 1.0;
    for (int i = 0; i < n; ++i) {
      scale += std::abs(coeffs[static_cast<std::size_t>(i)]) * power;
      power *= std::abs(at);
    }
    if (!(std::abs(eval(at)) <= 1e-12 * std::max(1.0, scale)))
      throw RootFindingError("root finding did not reach the residual target");
  }
  return z;
}

} // namespace

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p) {
  std::vector<std::complex<double>> roots;

  // Zero roots are the exactly-known trailing-coefficient block.
  std::size_t zero_count = 0;
  const auto& coeffs = p.coeffs();
  while (zero_count < coeffs.size() - 1 && coeffs[zero_count] == 0)
    ++zero_count;
  roots.assign(zero_count, std::complex<double>(0.0, 0.0));
  if (zero_count == coeffs.size() - 1)
    return roots;

  RatPoly reduced(coeffs.begin() + static_cast<std::ptrdiff_t>(zero_count), coeffs.end());
  for (const auto& [factor, multiplicity] : squarefree_split(reduced)) {
    std::vector<double> as_double;
    as_double.reserve(factor.size());
    for (const auto& c : factor) {
      const double value = static_cast<double>(c);
      if (!std::isfinite(value))
        throw RootFindingError("coefficient exceeds double range");
      as_double.push_back(value);
    }
    const auto factor_roots = durand_kerner(as_double);
    for (const auto& root : factor_roots)
      for (int copy = 0; copy < multiplicity; ++copy)
        roots.push_back(root);
  }
  if (roots.size() != static_cast<std::size_t>(p.degree()))
    throw std::logic_error("root multiplicities do not add up");
  return roots;
}

} // namespace nilfix
