#include "nilfix/free_lie.hpp"

#include <stdexcept>
#include <utility>

namespace nilfix {

void LieCombination::add(int index, int degree, const BigInt& coeff) {
  if (coeff == 0)
    return;
  if (is_zero())
    degree_ = degree;
  else if (degree_ != degree)
    throw std::logic_error("mixed degrees in a Lie combination");
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    terms_.emplace(index, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) {
    terms_.erase(it);
    if (terms_.empty())
      degree_ = 0;
  }
}

LieCombination& LieCombination::operator+=(const LieCombination& other) {
  for (const auto& [index, coeff] : other.terms_)
    add(index, other.degree_, coeff);
  return *this;
}

LieCombination& LieCombination::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    degree_ = 0;
    return *this;
  }
  for (auto& [index, coeff] : terms_)
    coeff *= scalar;
  return *this;
}

LieCombination LieCombination::operator-() const {
  LieCombination out = *this;
  for (auto& [index, coeff] : out.terms_)
    coeff = -coeff;
  return out;
}

FreeLieAlgebra::FreeLieAlgebra(HallBasis basis) : basis_(std::move(basis)) {}

LieCombination FreeLieAlgebra::unit(int index) const {
  LieCombination out;
  out.add(index, basis_.element(index).degree, 1);
  return out;
}

LieCombination FreeLieAlgebra::bracket(int u, int v) const {
  if (u == v)
    return {};
  const std::uint64_t key =
      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
      static_cast<std::uint32_t>(v);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
  }
  LieCombination result = bracket_uncached(u, v);
  {
    std::unique_lock lock(mutex_);
    cache_.emplace(key, result);
  }
  return result;
}

LieCombination FreeLieAlgebra::bracket_uncached(int u, int v) const {
  if (u > v)
    return -bracket(v, u);

  const HallElement& left = basis_.element(u);
  const HallElement& right = basis_.element(v);
  const int degree = left.degree + right.degree;
  if (degree > basis_.degree_bound())
    throw std::logic_error("bracket exceeds the basis degree bound");

  // [u,v] with u < v is itself Hall unless v = [v1,v2] with v1 > u.
  if (right.is_leaf() || right.left <= u) {
    const int index = basis_.bracket_index(u, v);
    if (index < 0)
      throw std::logic_error("Hall pair missing from the basis");
    return unit(index);
  }

  LieCombination out = bracket(bracket(u, right.left), unit(right.right));
  out += bracket(unit(right.left), bracket(u, right.right));
  return out;
}

LieCombination FreeLieAlgebra::bracket(const LieCombination& p, const LieCombination& q) const {
  LieCombination out;
  if (p.is_zero() || q.is_zero())
    return out;
  for (const auto& [u, cu] : p.terms()) {
    for (const auto& [v, cv] : q.terms()) {
      LieCombination term = bracket(u, v);
      term *= cu * cv;
      out += term;
    }
  }
  return out;
}

LieCombination FreeLieAlgebra::apply_endomorphism(const IntegerMatrix& a, int index) const {
  const auto rank = static_cast<std::size_t>(basis_.rank());
  if (a.rows() != rank || a.cols() != rank)
    throw std::domain_error("endomorphism matrix must be rank x rank");
  const HallElement& el = basis_.element(index);
  if (el.is_leaf()) {
    LieCombination out;
    const std::size_t j = static_cast<std::size_t>(el.generator - 1);
    for (std::size_t k = 0; k < rank; ++k)
      out.add(static_cast<int>(k), 1, a.at(k, j));
    return out;
  }
  return bracket(apply_endomorphism(a, el.left), apply_endomorphism(a, el.right));
}

} // namespace nilfix
