#include <doctest.h>

#include <complex>
#include <set>

#include "nilfix/hall_basis.hpp"
#include "oracles.hpp"

using namespace nilfix;

namespace {

std::vector<std::string> layer_exprs(const HallBasis& basis, int degree) {
  std::vector<std::string> out;
  for (const HallElement& el : basis.layer(degree))
    out.push_back(basis.expr(el.order_index));
  return out;
}

} // namespace

TEST_CASE("witt dimensions") {
  CHECK(witt_dimension(2, 2) == 1);
  CHECK(witt_dimension(2, 3) == 2);

  // degree 2 by brute force: pairs i < j
  std::int64_t pairs = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      ++pairs;
  CHECK(witt_dimension(4, 2) == pairs);

  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= 6; ++n)
      CHECK(witt_dimension(r, n) == test::count_lyndon_words(r, n));

  CHECK_THROWS_AS(witt_dimension(1, 2), std::domain_error);
  CHECK_THROWS_AS(witt_dimension(2, 0), std::domain_error);
}

TEST_CASE("small bases match the layer descriptions") {
  const HallBasis b22(2, 2);
  CHECK(layer_exprs(b22, 1) == std::vector<std::string>{"X1", "X2"});
  CHECK(layer_exprs(b22, 2) == std::vector<std::string>{"[X1,X2]"});

  const HallBasis b23(2, 3);
  CHECK(layer_exprs(b23, 3) == std::vector<std::string>{"[X1,[X1,X2]]", "[X2,[X1,X2]]"});

  const HallBasis b32(3, 2);
  CHECK(layer_exprs(b32, 2) == std::vector<std::string>{"[X1,X2]", "[X1,X3]", "[X2,X3]"});

  const HallBasis b26(2, 6);
  const std::vector<std::size_t> expected = {2, 1, 2, 3, 6, 9};
  for (int i = 1; i <= 6; ++i)
    CHECK(b26.layer_size(i) == expected[static_cast<std::size_t>(i - 1)]);
}

TEST_CASE("constructor rejects bad parameters") {
  CHECK_THROWS_AS(HallBasis(1, 3), std::domain_error);
  CHECK_THROWS_AS(HallBasis(2, 0), std::domain_error);
}

TEST_CASE("layer sizes equal witt dimensions up to (5,6)") {
  for (int r = 2; r <= 5; ++r) {
    const HallBasis basis(r, 6);
    for (int i = 1; i <= 6; ++i)
      CHECK(basis.layer_size(i) == static_cast<std::size_t>(witt_dimension(r, i)));
  }
}

TEST_CASE("hall conditions and multidegrees hold for every element") {
  const HallBasis basis(3, 5);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const HallElement& el = basis.element(static_cast<int>(idx));
    int total = 0;
    for (int g = 0; g < 3; ++g)
      total += el.multidegree[static_cast<std::size_t>(g)];
    CHECK(total == el.degree);
    if (el.is_leaf())
      continue;
    CHECK(el.left < el.right);
    const HallElement& right = basis.element(el.right);
    if (!right.is_leaf())
      CHECK(right.left <= el.left);
    for (int g = 0; g < 3; ++g)
      CHECK(el.multidegree[static_cast<std::size_t>(g)] ==
            basis.element(el.left).multidegree[static_cast<std::size_t>(g)] +
                basis.element(el.right).multidegree[static_cast<std::size_t>(g)]);
  }

  // layer 2 multidegrees are exactly {e_i + e_j : i < j}
  std::multiset<std::vector<int>> seen, expected;
  for (const HallElement& el : basis.layer(2))
    seen.insert(el.multidegree);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::vector<int> md(3, 0);
      md[static_cast<std::size_t>(i)] = 1;
      md[static_cast<std::size_t>(j)] = 1;
      expected.insert(md);
    }
  CHECK(seen == expected);
}

TEST_CASE("construction is deterministic") {
  const HallBasis a(4, 5);
  const HallBasis b(4, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const HallElement& x = a.element(static_cast<int>(i));
    const HallElement& y = b.element(static_cast<int>(i));
    CHECK(x.left == y.left);
    CHECK(x.right == y.right);
    CHECK(x.order_index == y.order_index);
    CHECK(x.multidegree == y.multidegree);
  }
}

TEST_CASE("hall monomials") {
  const HallBasis basis(3, 4);
  const std::vector<std::complex<double>> lambda = {{2.0, 0.0}, {0.5, 1.0}, {-3.0, 0.25}};

  // closed monomial form equals the recursive product, for every element
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const HallElement& el = basis.element(static_cast<int>(idx));
    if (el.is_leaf()) {
      CHECK(hall_monomial(basis, el.order_index, lambda) ==
            lambda[static_cast<std::size_t>(el.generator - 1)]);
      continue;
    }
    const auto product = hall_monomial(basis, el.left, lambda) *
                         hall_monomial(basis, el.right, lambda);
    CHECK(std::abs(hall_monomial(basis, el.order_index, lambda) - product) < 1e-12);
  }

  // [X1,X2] -> lambda_1 lambda_2 and [X2,[X1,X3]] -> lambda_1 lambda_2 lambda_3
  const int x1x2 = basis.bracket_index(0, 1);
  REQUIRE(x1x2 >= 0);
  CHECK(std::abs(hall_monomial(basis, x1x2, lambda) - lambda[0] * lambda[1]) < 1e-12);
  const int x1x3 = basis.bracket_index(0, 2);
  REQUIRE(x1x3 >= 0);
  const int deep = basis.bracket_index(1, x1x3);
  REQUIRE(deep >= 0);
  CHECK(std::abs(hall_monomial(basis, deep, lambda) - lambda[0] * lambda[1] * lambda[2]) < 1e-12);

  // all-ones lambda gives 1 everywhere
  const std::vector<std::complex<double>> ones(3, {1.0, 0.0});
  for (std::size_t idx = 0; idx < basis.size(); ++idx)
    CHECK(hall_monomial(basis, static_cast<int>(idx), ones) == std::complex<double>(1.0, 0.0));
}
