#include <doctest.h>

#include "core/cyclotomic.hpp"
#include "helpers.hpp"

using namespace ultk;

namespace {

ZPoly zp(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> cs;
  for (long c : coeffs) cs.emplace_back(c);
  return ZPoly(std::move(cs));
}

// Independent oracle: a nonzero integer polynomial is +/- a product of
// cyclotomics iff its leading coefficient is +/-1 and it divides
// (t^120 - 1)^4, since every n with phi(n) <= 4 divides 120 and
// multiplicities are at most the degree (here <= 4). Implemented by modular
// exponentiation, no trial division involved.
bool cyclotomic_oracle_deg_le_4(const ZPoly& p) {
  if (p.is_zero()) return false;
  ZPoly q = p.leading() < 0 ? -p : p;
  if (q.leading() != 1) return false;
  if (q.degree() == 0) return true;  // the constant 1
  ZPoly base = (ZPoly::monomial(120, 1) - ZPoly::one()).divmod_unit(q).second;
  ZPoly acc = ZPoly::one();
  for (int i = 0; i < 4; ++i) {
    acc = (acc * base).divmod_unit(q).second;
  }
  return acc.is_zero();
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
  CHECK(cyclotomic_polynomial(1) == zp({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == zp({1, 1}));
  CHECK(cyclotomic_polynomial(4) == zp({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == zp({1, -1, 1}));
  CHECK(cyclotomic_polynomial(105).degree() == 48);  // first with a coefficient -2
  CHECK(cyclotomic_polynomial(105).coefficient(7) == -2);
}

TEST_CASE("the genus-3 numerator is not a cyclotomic product") {
  auto r = cyclotomic_product_test(zp({1, -2, 4, -2, 1}));
  CHECK(!r.is_product);
  REQUIRE(r.obstruction.has_value());
  CHECK(r.obstruction->degree() == 4);
}

TEST_CASE("the genus-1 numerator factors as Phi_1^2 Phi_4") {
  auto r = cyclotomic_product_test(zp({1, -2, 2, -2, 1}));
  CHECK(r.is_product);
  CHECK(r.sign == 1);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0] == std::pair<unsigned, unsigned>{1, 2});
  CHECK(r.factors[1] == std::pair<unsigned, unsigned>{4, 1});
  // Reconstruction: the factors really multiply back to the input.
  ZPoly rebuilt = ZPoly::one();
  for (auto [n, m] : r.factors) {
    for (unsigned i = 0; i < m; ++i) rebuilt = rebuilt * cyclotomic_polynomial(n);
  }
  CHECK(rebuilt == zp({1, -2, 2, -2, 1}));
}

TEST_CASE("1 - t is minus a cyclotomic polynomial") {
  auto r = cyclotomic_product_test(zp({1, -1}));
  CHECK(r.is_product);
  CHECK(r.sign == -1);
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0] == std::pair<unsigned, unsigned>{1, 1});
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS_AS(cyclotomic_product_test(ZPoly()), ArgError);
}

TEST_CASE("non-unit content is never a cyclotomic product") {
  auto r = cyclotomic_product_test(zp({-2, 2}));  // 2(t - 1)
  CHECK(!r.is_product);
}

TEST_CASE("trial division agrees with the divisibility oracle up to degree 4") {
  // Exhaustive sweep over integer polynomials with coefficients in [-3, 3]
  // and degree <= 4 (zero polynomial excluded).
  long checked = 0, products = 0;
  for (int c4 = -3; c4 <= 3; ++c4) {
    for (int c3 = -3; c3 <= 3; ++c3) {
      for (int c2 = -3; c2 <= 3; ++c2) {
        for (int c1 = -3; c1 <= 3; ++c1) {
          for (int c0 = -3; c0 <= 3; ++c0) {
            ZPoly p = zp({c0, c1, c2, c3, c4});
            if (p.is_zero()) continue;
            bool expected = cyclotomic_oracle_deg_le_4(p);
            auto got = cyclotomic_product_test(p);
            REQUIRE(got.is_product == expected);
            ++checked;
            if (expected) ++products;
          }
        }
      }
    }
  }
  CHECK(checked == 7 * 7 * 7 * 7 * 7 - 1);
  CHECK(products > 0);
}
