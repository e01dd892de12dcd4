#ifndef NILFIX_HALL_BASIS_HPP
#define NILFIX_HALL_BASIS_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace nilfix {

/// One node of a Hall basis: a generator X_g (leaf) or a bracket
/// [left,right] of two earlier elements, referenced by global order index.
struct HallElement {
  int left = -1;
  int right = -1;
  int generator = 0;            ///< 1..r for leaves, 0 for brackets
  int degree = 1;               ///< bracket length
  int order_index = 0;          ///< position in the degree-major total order
  std::vector<int> multidegree; ///< per-generator occurrence counts, length r

  bool is_leaf() const { return left < 0; }
};

/// Ordered Hall basis of the free Lie algebra on `rank` generators, with all
/// elements of degree <= degree_bound. Elements of degree n are brackets
/// [U,V] with U < V and, when V = [V1,V2], V1 <= U; smaller degree always
/// precedes larger degree. Construction is deterministic; instances are
/// immutable and safe to share across threads.
class HallBasis {
public:
  /// Tie-break inside one degree. The resulting layer determinants do not
  /// depend on this choice (the basis change is a similarity); the
  /// alternative order exists so tests can verify exactly that.
  enum class IntraOrder { pair_ascending, pair_descending };

  /// Requires rank >= 2 and degree_bound >= 1, otherwise std::domain_error.
  HallBasis(int rank, int degree_bound, IntraOrder order = IntraOrder::pair_ascending);

  int rank() const { return rank_; }
  int degree_bound() const { return degree_bound_; }
  std::size_t size() const { return elements_.size(); }
  const HallElement& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }

  /// Elements of one degree, 1-based.
  std::span<const HallElement> layer(int degree) const;
  std::size_t layer_size(int degree) const;
  int layer_offset(int degree) const;

  /// Order index of the basis element [u,v], or -1 when that bracket is not
  /// itself a Hall element.
  int bracket_index(int u, int v) const;

  /// Printable form, e.g. "[X1,[X1,X2]]".
  std::string expr(int index) const;

private:
  int rank_;
  int degree_bound_;
  std::vector<HallElement> elements_;
  std::vector<int> offsets_; // offsets_[d] = first index of degree d; sentinel at the end
  std::unordered_map<std::uint64_t, int> bracket_lookup_;
};

/// Moebius function mu(n), n >= 1.
int moebius(int n);

/// Dimension of the degree-i graded piece of the free Lie algebra on `rank`
/// generators: (1/i) * sum_{d | i} mu(d) * rank^(i/d). rank >= 2, i >= 1.
std::int64_t witt_dimension(int rank, int i);

/// Eigenvalue monomial of a basis element: prod_k lambda_k^multidegree[k].
/// Equals the recursive rule value(U)*value(V) on brackets.
std::complex<double> hall_monomial(const HallBasis& basis, int index,
                                   std::span<const std::complex<double>> lambda);

} // namespace nilfix

#endif
