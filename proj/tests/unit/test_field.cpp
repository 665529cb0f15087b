#include <doctest.h>

#include "core/field.hpp"
#include "helpers.hpp"

using namespace ultk;

TEST_CASE("rational field keeps canonical reduced form") {
  auto q = CoefficientField::rationals();
  Coeff half = q.from_fraction(2, 4);
  CHECK(half.get_num() == 1);
  CHECK(half.get_den() == 2);
  Coeff neg = q.from_fraction(3, -6);
  CHECK(neg.get_num() == -1);
  CHECK(neg.get_den() == 2);
  CHECK(q.to_string(neg) == "-1/2");
  CHECK(q.is_one(q.mul(half, q.from_integer(2))));
}

TEST_CASE("prime field arithmetic stays in [0, p)") {
  auto f7 = CoefficientField::prime_field(7);
  Coeff a = f7.from_integer(10);
  CHECK(a == 3);
  Coeff inv3 = f7.inv(a);
  CHECK(f7.mul(a, inv3) == 1);
  CHECK(f7.from_integer(-1) == 6);
  CHECK(f7.from_fraction(1, 3) == 5);  // 3 * 5 = 15 = 1 mod 7
  CHECK(f7.is_zero(f7.from_integer(7)));
}

TEST_CASE("prime field rejects composite modulus and zero division") {
  CHECK_THROWS_AS(CoefficientField::prime_field(6), ArgError);
  CHECK_THROWS_AS(CoefficientField::prime_field(1), ArgError);
  auto f5 = CoefficientField::prime_field(5);
  CHECK_THROWS_AS(f5.from_fraction(1, 5), ArgError);
  auto q = CoefficientField::rationals();
  CHECK_THROWS_AS(q.from_fraction(1, 0), ArgError);
  CHECK_THROWS_AS(q.inv(q.zero()), ArgError);
}

TEST_CASE("field equality distinguishes characteristic") {
  CHECK(CoefficientField::rationals() == CoefficientField::rationals());
  CHECK(CoefficientField::prime_field(5) != CoefficientField::prime_field(7));
  CHECK(CoefficientField::rationals() != CoefficientField::prime_field(5));
}
