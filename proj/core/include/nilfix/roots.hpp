#ifndef NILFIX_ROOTS_HPP
#define NILFIX_ROOTS_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "nilfix/polynomial.hpp"

namespace nilfix {

/// The simultaneous iteration failed to converge (or the residual check
/// failed after the iteration cap). A numeric failure, not a result.
struct RootFindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All complex roots of p, listed with multiplicity (size = degree).
/// Zero roots are stripped exactly, the rest is split into squarefree
/// factors (Yun, exact rational arithmetic), and each factor's simple roots
/// come from Durand-Kerner iteration started on a perturbed circle, run to
/// relative residual <= 1e-12 under an iteration cap.
std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p);

} // namespace nilfix

#endif
