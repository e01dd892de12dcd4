// Test-only oracles, kept independent of the implementation paths they
// check: a naive cofactor determinant, a free-associative-algebra expansion
// of bracket trees (brackets become uv - vu on words), a Lyndon-word count
// for the graded dimensions, and small numeric helpers.
#ifndef NILFIX_TEST_ORACLES_HPP
#define NILFIX_TEST_ORACLES_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "nilfix/free_lie.hpp"
#include "nilfix/hall_basis.hpp"
#include "nilfix/matrix.hpp"

namespace nilfix::test {

// Recursive cofactor expansion along the first row. Exponential; fine for
// the n <= 7 matrices it is used on.
inline BigInt cofactor_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return m.at(0, 0);
  BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0)
      continue;
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t col = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j)
          continue;
        minor.at(i - 1, col++) = m.at(i, k);
      }
    }
    const BigInt term = m.at(0, j) * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// Noncommutative polynomial over words in the generators (0-based letters).
using Word = std::vector<int>;
using TensorPoly = std::map<Word, BigInt>;

inline TensorPoly tensor_product(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto [it, inserted] = out.try_emplace(std::move(w), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0)
          out.erase(it);
      }
    }
  return out;
}

inline void tensor_add(TensorPoly& a, const TensorPoly& b, const BigInt& scale) {
  for (const auto& [w, coeff] : b) {
    auto [it, inserted] = a.try_emplace(w, coeff * scale);
    if (!inserted) {
      it->second += coeff * scale;
      if (it->second == 0)
        a.erase(it);
    }
  }
}

// Expansion of a Hall tree in the tensor algebra: leaves are letters,
// [U,V] expands to UV - VU.
inline TensorPoly tensor_of_element(const HallBasis& basis, int index) {
  const HallElement& el = basis.element(index);
  if (el.is_leaf())
    return {{Word{el.generator - 1}, BigInt(1)}};
  const TensorPoly left = tensor_of_element(basis, el.left);
  const TensorPoly right = tensor_of_element(basis, el.right);
  TensorPoly out = tensor_product(left, right);
  tensor_add(out, tensor_product(right, left), BigInt(-1));
  return out;
}

inline TensorPoly tensor_of_combination(const HallBasis& basis, const LieCombination& comb) {
  TensorPoly out;
  for (const auto& [index, coeff] : comb.terms())
    tensor_add(out, tensor_of_element(basis, index), coeff);
  return out;
}

// Number of Lyndon words of length n over an alphabet of size r, counted by
// brute force; equals the graded dimension of the free Lie algebra.
inline std::int64_t count_lyndon_words(int r, int n) {
  std::int64_t count = 0;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  while (true) {
    bool lyndon = true;
    for (int shift = 1; shift < n && lyndon; ++shift) {
      // word must be strictly smaller than each of its proper rotations
      for (int i = 0; i < n; ++i) {
        const int a = word[static_cast<std::size_t>(i)];
        const int b = word[static_cast<std::size_t>((i + shift) % n)];
        if (a != b) {
          lyndon = a < b;
          break;
        }
        if (i == n - 1)
          lyndon = false; // periodic
      }
    }
    if (lyndon)
      ++count;
    int pos = n - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == r - 1)
      word[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0)
      break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return count;
}

inline IntegerMatrix random_matrix(int r, long long bound, std::mt19937_64& gen) {
  std::uniform_int_distribution<long long> entry(-bound, bound);
  IntegerMatrix a(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      a.at(i, j) = entry(gen);
  return a;
}

// Greedy multiset match: every left point must have an unused right point
// within tol.
inline bool multisets_match(std::vector<std::complex<double>> left,
                            std::vector<std::complex<double>> right, double tol) {
  if (left.size() != right.size())
    return false;
  std::vector<bool> used(right.size(), false);
  for (const auto& p : left) {
    double best = tol;
    std::size_t best_index = right.size();
    for (std::size_t i = 0; i < right.size(); ++i) {
      if (used[i])
        continue;
      const double d = std::abs(p - right[i]);
      if (d <= best) {
        best = d;
        best_index = i;
      }
    }
    if (best_index == right.size())
      return false;
    used[best_index] = true;
  }
  return true;
}

} // namespace nilfix::test

#endif
