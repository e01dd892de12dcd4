#ifndef NILFIX_REIDEMEISTER_HPP
#define NILFIX_REIDEMEISTER_HPP

#include <optional>
#include <string>

#include "nilfix/bigint.hpp"
#include "nilfix/induced.hpp"
#include "nilfix/matrix.hpp"
#include "nilfix/polynomial.hpp"

namespace nilfix {

enum class Mode { automorphism, endomorphism };

/// A Reidemeister number: a positive integer or infinity. Infinity is a
/// legitimate spectrum member, never an error.
class ReidemeisterValue {
public:
  static ReidemeisterValue finite(BigInt v) { return ReidemeisterValue(false, std::move(v)); }
  static ReidemeisterValue infinity() { return ReidemeisterValue(true, 0); }

  bool is_infinite() const { return infinite_; }
  const BigInt& value() const;
  std::string to_string() const { return infinite_ ? "inf" : value_.str(); }

  bool operator==(const ReidemeisterValue&) const = default;

private:
  ReidemeisterValue(bool infinite, BigInt v) : infinite_(infinite), value_(std::move(v)) {}
  bool infinite_;
  BigInt value_;
};

struct ReidemeisterReport {
  std::string input; ///< descriptor of the polynomial or matrix
  int r = 0;
  int c = 0;
  Mode mode = Mode::automorphism;
  LayerDeterminants layers;
  ReidemeisterValue value = ReidemeisterValue::infinity();
  std::optional<double> oracle_value;
};

/// Companion matrix with subdiagonal ones and last column
/// (-a_0, ..., -a_{r-1}); its characteristic polynomial is p.
IntegerMatrix companion_matrix(const IntPolynomial& p);

/// Computes Reidemeister numbers of endomorphisms of the free nilpotent
/// group of a fixed rank and nilpotency class. One engine per (r, c); the
/// Hall machinery and bracket cache are shared across calls and threads.
class ReidemeisterEngine {
public:
  /// r >= 1, c >= 1. For r = 1 every layer above the first is trivial and
  /// no Hall basis is needed.
  ReidemeisterEngine(int r, int c);

  int r() const { return r_; }
  int c() const { return c_; }
  const FreeLieAlgebra& algebra() const;

  /// |det| = 1 is enforced in automorphism mode (std::domain_error).
  /// The value is prod_i |det(1 - M_i)|, infinite iff some factor is 0.
  ReidemeisterReport compute(const IntegerMatrix& a, Mode mode,
                             DetMethod method = DetMethod::structural) const;
  ReidemeisterReport compute(const IntPolynomial& p, Mode mode,
                             DetMethod method = DetMethod::structural) const;

private:
  int r_;
  int c_;
  std::optional<FreeLieAlgebra> algebra_;
};

/// One-shot convenience wrappers around a temporary engine.
ReidemeisterReport reidemeister_number(const IntegerMatrix& a, int c, Mode mode,
                                       DetMethod method = DetMethod::structural);
ReidemeisterReport reidemeister_number(const IntPolynomial& p, int c, Mode mode,
                                       DetMethod method = DetMethod::structural);

/// x^{2m} - x^{m+1} + (n-1) x^m + 1; value at 1 is n. Requires m >= 2, n >= 1.
IntPolynomial family_even(int m, const BigInt& n);

/// x^{2m+1} + (n+1)x^{m+2} + (1-n)x^{m+1} + (n-1)x^m - nx^{m-1} - 1;
/// value at 1 is 1. Requires m >= 2.
IntPolynomial family_odd(int m, const BigInt& n);

/// Offset in the odd-family count, by residue of m mod 6:
/// m = 4 -> 0; m = 3,5 -> 1; m = 0,2 -> 3; m = 1 -> 4. Requires m >= 1.
int c_offset(int m);

/// Witness families: q2(n) = x^2 + nx - 1, q3(n) = x^3 + nx^2 + (n-1)x + 1,
/// r3(n) = x^3 + nx^2 + (n-2)x + 1.
IntPolynomial family_q2(const BigInt& n);
IntPolynomial family_q3(const BigInt& n);
IntPolynomial family_r3(const BigInt& n);

/// Closed forms for the low-rank cases, when applicable:
///   (2,2), a_0 = -1:  2|a_1|
///   (3,2), a_0 = +-1: |p(1) p(-a_0)|
///   (2,3), a_0 = -1:  2 a_1^2
///   (3,3), a_0 = +1:  4|a^2-b^2|(a+b-ab)^2 with a = 1+a_1, b = 1+a_2
/// A formula value of 0 is reported as infinity. Returns nullopt outside
/// the supported (r, c, a_0) combinations; throws on degree mismatch.
std::optional<ReidemeisterValue> closed_form(int r, int c, const IntPolynomial& p);

/// Floating-point cross-check: extracts the complex roots of p numerically
/// and evaluates prod_{i<=c} prod_{X in H_i} |1 - monomial(X)|. Intended for
/// validation, not as ground truth. Throws RootFindingError on
/// non-convergence.
double float_oracle(const IntPolynomial& p, int c);

} // namespace nilfix

#endif
