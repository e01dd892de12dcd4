#include <doctest.h>

#include <random>

#include "nilfix/free_lie.hpp"
#include "oracles.hpp"

using namespace nilfix;

namespace {

LieCombination apply_to_combination(const FreeLieAlgebra& alg, const IntegerMatrix& a,
                                    const LieCombination& comb) {
  LieCombination out;
  for (const auto& [index, coeff] : comb.terms()) {
    LieCombination image = alg.apply_endomorphism(a, index);
    image *= coeff;
    out += image;
  }
  return out;
}

} // namespace

TEST_CASE("tensor oracle sanity: [X1,X2] expands to X1X2 - X2X1") {
  const HallBasis basis(2, 2);
  const auto t = test::tensor_of_element(basis, basis.bracket_index(0, 1));
  REQUIRE(t.size() == 2);
  CHECK(t.at({0, 1}) == 1);
  CHECK(t.at({1, 0}) == -1);
}

TEST_CASE("hall_bracket basic cases") {
  FreeLieAlgebra alg{HallBasis(3, 3)};

  const LieCombination x1x2 = alg.bracket(0, 1);
  REQUIRE(x1x2.terms().size() == 1);
  CHECK(x1x2.terms().begin()->first == alg.basis().bracket_index(0, 1));
  CHECK(x1x2.terms().begin()->second == 1);

  CHECK(alg.bracket(0, 0).is_zero());

  // [X1,[X2,X3]] = [X2,[X1,X3]] - [X3,[X1,X2]]
  const int x2x3 = alg.basis().bracket_index(1, 2);
  REQUIRE(x2x3 >= 0);
  const LieCombination normal = alg.bracket(0, x2x3);
  const int x1x3 = alg.basis().bracket_index(0, 2);
  const int expected_a = alg.basis().bracket_index(1, x1x3);
  const int expected_b = alg.basis().bracket_index(2, alg.basis().bracket_index(0, 1));
  REQUIRE(expected_a >= 0);
  REQUIRE(expected_b >= 0);
  REQUIRE(normal.terms().size() == 2);
  CHECK(normal.terms().at(expected_a) == 1);
  CHECK(normal.terms().at(expected_b) == -1);
}

TEST_CASE("hall_bracket agrees with the tensor-algebra oracle") {
  // every pair in the rank-3 class-3 (14-dimensional) algebra, and rank 2 up
  // to class 5
  for (const auto& [r, c] : std::vector<std::pair<int, int>>{{3, 3}, {2, 5}}) {
    FreeLieAlgebra alg{HallBasis(r, c)};
    const HallBasis& basis = alg.basis();
    const int total = static_cast<int>(basis.size());
    for (int u = 0; u < total; ++u)
      for (int v = 0; v < total; ++v) {
        if (basis.element(u).degree + basis.element(v).degree > c)
          continue;
        test::TensorPoly direct = test::tensor_product(test::tensor_of_element(basis, u),
                                                       test::tensor_of_element(basis, v));
        test::tensor_add(direct,
                         test::tensor_product(test::tensor_of_element(basis, v),
                                              test::tensor_of_element(basis, u)),
                         BigInt(-1));
        CHECK(direct == test::tensor_of_combination(basis, alg.bracket(u, v)));
      }
  }
}

TEST_CASE("antisymmetry holds exhaustively up to (3,5)") {
  for (int r = 2; r <= 3; ++r) {
    FreeLieAlgebra alg{HallBasis(r, 5)};
    const int total = static_cast<int>(alg.basis().size());
    for (int u = 0; u < total; ++u)
      for (int v = 0; v < total; ++v) {
        if (alg.basis().element(u).degree + alg.basis().element(v).degree > 5)
          continue;
        CHECK(alg.bracket(u, v) == -alg.bracket(v, u));
      }
  }
}

TEST_CASE("jacobi identity holds for all triples of total degree <= 5") {
  for (int r = 2; r <= 3; ++r) {
    FreeLieAlgebra alg{HallBasis(r, 5)};
    const int total = static_cast<int>(alg.basis().size());
    for (int a = 0; a < total; ++a)
      for (int b = 0; b < total; ++b)
        for (int c = 0; c < total; ++c) {
          const int degree = alg.basis().element(a).degree + alg.basis().element(b).degree +
                             alg.basis().element(c).degree;
          if (degree > 5)
            continue;
          LieCombination sum = alg.bracket(alg.unit(a), alg.bracket(b, c));
          sum += alg.bracket(alg.unit(b), alg.bracket(c, a));
          sum += alg.bracket(alg.unit(c), alg.bracket(a, b));
          CHECK(sum.is_zero());
        }
  }
}

TEST_CASE("bracket of combinations is bilinear") {
  FreeLieAlgebra alg{HallBasis(2, 3)};
  const LieCombination zero;
  CHECK(alg.bracket(zero, alg.unit(0)).is_zero());
  CHECK(alg.bracket(alg.unit(0), zero).is_zero());

  CHECK(alg.bracket(alg.unit(0), alg.unit(1)) == alg.bracket(0, 1));

  LieCombination sum = alg.unit(0);
  sum += alg.unit(1);
  CHECK(alg.bracket(sum, alg.unit(1)) == alg.bracket(0, 1)); // [X2,X2] = 0
}

TEST_CASE("lie combination arithmetic laws") {
  FreeLieAlgebra alg{HallBasis(3, 2)};
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int trial = 0; trial < 25; ++trial) {
    LieCombination a, b, c;
    for (int g = 0; g < 3; ++g) {
      a.add(g, 1, coeff(gen));
      b.add(g, 1, coeff(gen));
      c.add(g, 1, coeff(gen));
    }
    const BigInt s = coeff(gen);

    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    LieCombination scaled_sum = a + b;
    scaled_sum *= s;
    LieCombination sa = a, sb = b;
    sa *= s;
    sb *= s;
    CHECK(scaled_sum == sa + sb);
    CHECK(a + (-a) == LieCombination{});
  }
}

TEST_CASE("mixed-degree accumulation is rejected") {
  FreeLieAlgebra alg{HallBasis(2, 2)};
  LieCombination comb = alg.unit(0);
  CHECK_THROWS_AS(comb.add(alg.basis().bracket_index(0, 1), 2, 1), std::logic_error);
}

TEST_CASE("apply_endomorphism") {
  FreeLieAlgebra alg{HallBasis(2, 3)};
  const int x1x2 = alg.basis().bracket_index(0, 1);

  SUBCASE("identity maps every element to itself") {
    const IntegerMatrix id = IntegerMatrix::identity(2);
    for (std::size_t idx = 0; idx < alg.basis().size(); ++idx)
      CHECK(alg.apply_endomorphism(id, static_cast<int>(idx)) ==
            alg.unit(static_cast<int>(idx)));
  }

  SUBCASE("diagonal scaling multiplies the monomial") {
    IntegerMatrix d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    const LieCombination image = alg.apply_endomorphism(d, x1x2);
    REQUIRE(image.terms().size() == 1);
    CHECK(image.terms().at(x1x2) == 6);
  }

  SUBCASE("companion of x^2 + 3x - 1 scales [X1,X2] by its determinant") {
    IntegerMatrix a(2, 2);
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = -3;
    const LieCombination image = alg.apply_endomorphism(a, x1x2);
    REQUIRE(image.terms().size() == 1);
    CHECK(image.terms().at(x1x2) == -1);
  }

  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(alg.apply_endomorphism(IntegerMatrix::identity(3), 0), std::domain_error);
  }
}

TEST_CASE("apply_endomorphism respects composition") {
  std::mt19937_64 gen(11);
  for (int r = 2; r <= 3; ++r) {
    FreeLieAlgebra alg{HallBasis(r, 4)};
    for (int trial = 0; trial < 8; ++trial) {
      const IntegerMatrix a = test::random_matrix(r, 3, gen);
      const IntegerMatrix b = test::random_matrix(r, 3, gen);
      const IntegerMatrix ab = a * b;
      for (std::size_t idx = 0; idx < alg.basis().size(); ++idx) {
        const auto direct = alg.apply_endomorphism(ab, static_cast<int>(idx));
        const auto composed =
            apply_to_combination(alg, a, alg.apply_endomorphism(b, static_cast<int>(idx)));
        CHECK(direct == composed);
      }
    }
  }
}
