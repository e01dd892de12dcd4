#include "nilfix/hall_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilfix {

namespace {

std::uint64_t pair_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (std::int64_t{1} << 62) / base)
      throw std::overflow_error("witt_dimension overflow");
    out *= base;
  }
  return out;
}

} // namespace

int moebius(int n) {
  if (n < 1)
    throw std::domain_error("moebius requires n >= 1");
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    mu = -mu;
  }
  if (n > 1)
    mu = -mu;
  return mu;
}

std::int64_t witt_dimension(int rank, int i) {
  if (rank < 2)
    throw std::domain_error("witt_dimension requires rank >= 2");
  if (i < 1)
    throw std::domain_error("witt_dimension requires degree >= 1");
  std::int64_t sum = 0;
  for (int d = 1; d <= i; ++d) {
    if (i % d)
      continue;
    sum += moebius(d) * ipow(rank, i / d);
  }
  return sum / i;
}

HallBasis::HallBasis(int rank, int degree_bound, IntraOrder order)
    : rank_(rank), degree_bound_(degree_bound) {
  if (rank < 2)
    throw std::domain_error("Hall basis requires rank >= 2");
  if (degree_bound < 1)
    throw std::domain_error("Hall basis requires degree bound >= 1");

  offsets_.assign(static_cast<std::size_t>(degree_bound) + 2, 0);
  offsets_[1] = 0;
  for (int g = 1; g <= rank; ++g) {
    HallElement leaf;
    leaf.generator = g;
    leaf.degree = 1;
    leaf.order_index = g - 1;
    leaf.multidegree.assign(static_cast<std::size_t>(rank), 0);
    leaf.multidegree[static_cast<std::size_t>(g - 1)] = 1;
    elements_.push_back(std::move(leaf));
  }
  offsets_[2] = rank;

  for (int n = 2; n <= degree_bound; ++n) {
    std::vector<std::pair<int, int>> candidates;
    for (int k = 1; k < n; ++k) {
      const int l = n - k;
      for (int u = offsets_[static_cast<std::size_t>(k)]; u < offsets_[static_cast<std::size_t>(k) + 1]; ++u) {
        for (int v = offsets_[static_cast<std::size_t>(l)]; v < offsets_[static_cast<std::size_t>(l) + 1]; ++v) {
          if (u >= v)
            continue;
          const HallElement& right = elements_[static_cast<std::size_t>(v)];
          if (!right.is_leaf() && right.left > u)
            continue;
          candidates.emplace_back(u, v);
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    if (order == IntraOrder::pair_descending)
      std::reverse(candidates.begin(), candidates.end());

    for (const auto& [u, v] : candidates) {
      HallElement el;
      el.left = u;
      el.right = v;
      el.degree = n;
      el.order_index = static_cast<int>(elements_.size());
      el.multidegree.resize(static_cast<std::size_t>(rank));
      for (int g = 0; g < rank; ++g)
        el.multidegree[static_cast<std::size_t>(g)] =
            elements_[static_cast<std::size_t>(u)].multidegree[static_cast<std::size_t>(g)] +
            elements_[static_cast<std::size_t>(v)].multidegree[static_cast<std::size_t>(g)];
      bracket_lookup_.emplace(pair_key(u, v), el.order_index);
      elements_.push_back(std::move(el));
    }
    offsets_[static_cast<std::size_t>(n) + 1] = static_cast<int>(elements_.size());
  }
}

std::span<const HallElement> HallBasis::layer(int degree) const {
  if (degree < 1 || degree > degree_bound_)
    throw std::domain_error("layer degree out of range");
  const auto first = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(degree)]);
  const auto last = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(degree) + 1]);
  return {elements_.data() + first, last - first};
}

std::size_t HallBasis::layer_size(int degree) const { return layer(degree).size(); }

int HallBasis::layer_offset(int degree) const {
  if (degree < 1 || degree > degree_bound_)
    throw std::domain_error("layer degree out of range");
  return offsets_[static_cast<std::size_t>(degree)];
}

int HallBasis::bracket_index(int u, int v) const {
  auto it = bracket_lookup_.find(pair_key(u, v));
  return it == bracket_lookup_.end() ? -1 : it->second;
}

std::string HallBasis::expr(int index) const {
  const HallElement& el = element(index);
  if (el.is_leaf())
    return "X" + std::to_string(el.generator);
  return "[" + expr(el.left) + "," + expr(el.right) + "]";
}

std::complex<double> hall_monomial(const HallBasis& basis, int index,
                                   std::span<const std::complex<double>> lambda) {
  const HallElement& el = basis.element(index);
  std::complex<double> out = 1.0;
  for (int g = 0; g < basis.rank(); ++g)
    for (int e = 0; e < el.multidegree[static_cast<std::size_t>(g)]; ++e)
      out *= lambda[static_cast<std::size_t>(g)];
  return out;
}

} // namespace nilfix
