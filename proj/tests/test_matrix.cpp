#include <doctest.h>

#include <random>

#include "nilfix/matrix.hpp"
#include "nilfix/reidemeister.hpp"
#include "oracles.hpp"

using namespace nilfix;

TEST_CASE("det_one_minus fixed values") {
  CHECK(det_one_minus(IntegerMatrix::identity(3)) == 0);

  IntegerMatrix minus_one(1, 1);
  minus_one.at(0, 0) = -1;
  CHECK(det_one_minus(minus_one) == 2);

  CHECK(det_one_minus(IntegerMatrix(0, 0)) == 1);
}

TEST_CASE("bareiss equals cofactor expansion on random matrices") {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const IntegerMatrix m = test::random_matrix(5, 9, gen);
    CHECK(determinant(m) == test::cofactor_determinant(m));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const IntegerMatrix m = test::random_matrix(6, 4, gen);
    CHECK(determinant(m) == test::cofactor_determinant(m));
  }
}

TEST_CASE("bareiss handles zero pivots and singular matrices") {
  // leading pivot zero, determinant from a row swap
  IntegerMatrix m(3, 3);
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 4;
  m.at(1, 1) = 5;
  m.at(1, 2) = 6;
  m.at(2, 0) = 7;
  m.at(2, 1) = 8;
  m.at(2, 2) = 10;
  CHECK(determinant(m) == test::cofactor_determinant(m));

  // an all-zero column short-circuits to zero
  IntegerMatrix z(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 1; j < 4; ++j)
      z.at(i, j) = static_cast<long>(3 * i + j);
  CHECK(determinant(z) == 0);

  // duplicated rows
  std::mt19937_64 gen(9);
  IntegerMatrix dup = test::random_matrix(4, 5, gen);
  for (std::size_t j = 0; j < 4; ++j)
    dup.at(3, j) = dup.at(1, j);
  CHECK(determinant(dup) == 0);
}

TEST_CASE("newton identities recover characteristic polynomials") {
  // power sums of {2, 3}: t1 = 5, t2 = 13 -> (x-2)(x-3) = x^2 - 5x + 6
  const IntPolynomial p = char_poly_from_power_sums({BigRat(5), BigRat(13)});
  CHECK(p == IntPolynomial({6, -5, 1}));

  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const IntegerMatrix m = test::random_matrix(4, 6, gen);
    const IntPolynomial chi = characteristic_polynomial(m);
    // evaluate det(x*1 - m) independently at a few integers
    for (long long x : {0LL, 1LL, 2LL, -3LL}) {
      IntegerMatrix shifted(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          shifted.at(i, j) = (i == j ? BigInt(x) - m.at(i, j) : -m.at(i, j));
      CHECK(chi(BigInt(x)) == test::cofactor_determinant(shifted));
    }
  }
}

TEST_CASE("companion matrices have the right characteristic polynomial") {
  const std::vector<IntPolynomial> polys = {
      IntPolynomial({-1, 3, 1}),
      IntPolynomial({1, 2, 3, 1}),
      IntPolynomial({-1, 0, 0, 0, 1}),
  };
  for (const auto& p : polys)
    CHECK(characteristic_polynomial(companion_matrix(p)) == p);
}
