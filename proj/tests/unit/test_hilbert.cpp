#include <doctest.h>

#include "core/hilbert.hpp"
#include "helpers.hpp"

using namespace ultk;
using namespace ultk::testing;

namespace {

RingPresentation ring_of(const PolyContextPtr& ctx, std::initializer_list<const char*> rels) {
  std::vector<Polynomial> ps;
  for (const char* r : rels) ps.push_back(P(r, ctx));
  return RingPresentation(ctx->table, ctx->field, std::move(ps));
}

RingPresentation ci_ring(const char* f) {
  auto ctx = q_context({"s", "t", "x", "y", "z"}, {3, 3, 2, 2, 2});
  return ring_of(ctx, {"s^2 - x^3", f, "t^2 - z^3"});
}

// Brute-force Hilbert function: count monomials of weighted degree d outside
// the initial ideal, by direct enumeration against the generator list.
std::size_t count_standard(const RingPresentation& ring, std::uint64_t d) {
  return ring.component_basis(d).size();
}

}  // namespace

TEST_CASE("component bases of the complete-intersection ring") {
  RingPresentation S = ci_ring("s*t - (y^3 + x^2*z)");
  CHECK(S.component_basis(1).empty());
  auto b2 = S.component_basis(2);
  std::vector<std::string> names;
  for (const auto& m : b2) names.push_back(m.to_string(S.table()));
  CHECK(names == std::vector<std::string>{"x", "y", "z"});
  auto b0 = S.component_basis(0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].is_one());
}

TEST_CASE("hilbert series of free and truncated rings") {
  auto free2 = ring_of(q_context({"x", "y"}, {1, 1}), {});
  auto hs2 = hilbert_series(free2);
  CHECK(hs2.numerator == ZPoly::one());
  CHECK(hs2.denominator_weights == std::vector<std::uint32_t>{1, 1});

  auto trunc = ring_of(q_context({"x"}, {1}), {"x^3"});
  auto hst = hilbert_series(trunc);
  CHECK(hst.numerator == one_minus_t_pow(3));
  auto coeffs = hst.expand(5);
  CHECK(coeffs[0] == 1);
  CHECK(coeffs[1] == 1);
  CHECK(coeffs[2] == 1);
  CHECK(coeffs[3] == 0);
  CHECK(coeffs[5] == 0);
}

TEST_CASE("hilbert series of the complete-intersection ring is the Koszul form") {
  // Oracle: a regular sequence of degrees 6,6,6 gives numerator (1-t^6)^3.
  ZPoly koszul = one_minus_t_pow(6).pow(3);
  for (const char* f : {"s*t - (y^3 + x^2*z)", "s*t - y^3"}) {
    RingPresentation S = ci_ring(f);
    auto hs = hilbert_series(S);
    CHECK(hs.numerator == koszul);
    CHECK(hs.denominator_weights == std::vector<std::uint32_t>{2, 2, 2, 3, 3});
    // Degreewise cross-check against the standard-monomial count.
    auto coeffs = hs.expand(20);
    for (std::uint64_t d = 0; d <= 20; ++d) {
      CHECK(coeffs[d] == static_cast<long>(count_standard(S, d)));
    }
  }
}

TEST_CASE("hilbert coefficients match component counts on random graded quotients") {
  Rng rng(271828);
  int cases = 0;
  while (cases < 200) {
    std::uint32_t w1 = 1 + static_cast<std::uint32_t>(rng.below(3));
    std::uint32_t w2 = 1 + static_cast<std::uint32_t>(rng.below(3));
    std::uint32_t w3 = 1 + static_cast<std::uint32_t>(rng.below(3));
    auto ctx = q_context({"x", "y", "z"}, {w1, w2, w3});
    std::vector<Polynomial> rels;
    std::size_t count = 1 + rng.below(3);
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t deg = 1 + rng.below(4);
      Polynomial p = random_homogeneous(rng, ctx, deg);
      if (!p.is_zero()) rels.push_back(p);
    }
    RingPresentation ring(ctx->table, ctx->field, rels);
    auto hs = hilbert_series(ring);
    auto coeffs = hs.expand(12);
    for (std::uint64_t d = 0; d <= 12; ++d) {
      REQUIRE(coeffs[d] == static_cast<long>(count_standard(ring, d)));
    }
    ++cases;
  }
}

TEST_CASE("krull dimension") {
  CHECK(krull_dim(ring_of(q_context({"x", "y"}, {1, 1}), {})) == 2);
  CHECK(krull_dim(ring_of(q_context({"x", "y"}, {1, 1}), {"x*y"})) == 1);
  CHECK(krull_dim(ci_ring("s*t - (y^3 + x^2*z)")) == 2);
  CHECK(krull_dim(ring_of(q_context({"x"}, {1}), {"x^3"})) == 0);
}

TEST_CASE("complete intersection detection with Koszul witness") {
  auto S = ci_ring("s*t - (y^3 + x^2*z)");
  auto w = is_complete_intersection(S);
  CHECK(w.is_ci);
  CHECK(w.dimension == 2);
  CHECK(w.variable_count == 5);
  CHECK(w.relation_count == 3);
  CHECK(w.hilbert_identity);
  CHECK(w.koszul_numerator == one_minus_t_pow(6).pow(3));

  // dim 1, two variables, two relations: 2 - 1 != 2.
  auto bad = ring_of(q_context({"x", "y"}, {1, 1}), {"x^2", "x*y"});
  CHECK(!is_complete_intersection(bad).is_ci);

  // Polynomial ring: empty regular sequence.
  auto free3 = ring_of(q_context({"a", "b", "c"}, {1, 2, 3}), {});
  auto wf = is_complete_intersection(free3);
  CHECK(wf.is_ci);
  CHECK(wf.koszul_numerator == ZPoly::one());
}

TEST_CASE("hilbert expansion has nonnegative coefficients on corpus-style rings") {
  auto S = ci_ring("s*t - y^3");
  auto coeffs = hilbert_series(S).expand(40);
  for (const auto& c : coeffs) CHECK(c >= 0);
}
