#include <doctest.h>

#include <set>

#include "core/graded.hpp"
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

// Standard-monomial oracle for the reduction quotient, frozen before the
// main build. Setting x = z = 0 in the relations leaves (s^2, t^2, st - y^3)
// in Q[s,t,y]; its basis leading monomials are s^2, t^2, st, s y^3, t y^3,
// y^6 (hand S-pair computation, verified in test_groebner), so the standard
// monomials are exactly:
const std::set<std::string> kFrozenResidueBasis = {
    "1",     "s",     "t",     "y",   "s*y",   "t*y",
    "y^2",   "s*y^2", "t*y^2", "y^3", "y^4",   "y^5"};

}  // namespace

TEST_CASE("quotient length of the complete-intersection ring modulo (x, z) is 12") {
  for (const char* f : {"s*t - (y^3 + x^2*z)", "s*t - y^3"}) {
    RingPresentation S = ci_ring(f);
    auto ctx = S.context();
    auto len = quotient_length(S, {P("x", ctx), P("z", ctx)});
    REQUIRE(len.finite);
    CHECK(len.length == kFrozenResidueBasis.size());
    CHECK(len.length == 12);
  }

  // Independent enumeration against the frozen oracle list: monomials in
  // s, t, y not divisible by the oracle initial ideal.
  std::set<std::string> enumerated;
  for (std::uint32_t es = 0; es <= 2; ++es) {
    for (std::uint32_t et = 0; et <= 2; ++et) {
      for (std::uint32_t ey = 0; ey <= 6; ++ey) {
        bool standard = !(es >= 2 || et >= 2 || (es >= 1 && et >= 1) ||
                          (es >= 1 && ey >= 3) || (et >= 1 && ey >= 3) || ey >= 6);
        if (!standard) continue;
        std::string name;
        auto append = [&name](const std::string& var, std::uint32_t e) {
          if (e == 0) return;
          if (!name.empty()) name += "*";
          name += var;
          if (e > 1) name += "^" + std::to_string(e);
        };
        append("s", es);
        append("t", et);
        append("y", ey);
        enumerated.insert(name.empty() ? "1" : name);
      }
    }
  }
  CHECK(enumerated == kFrozenResidueBasis);
}

TEST_CASE("quotient length basics") {
  auto ctx = q_context({"x", "y"}, {1, 1});
  auto free2 = ring_of(ctx, {});
  auto full = quotient_length(free2, {P("x", ctx), P("y", ctx)});
  REQUIRE(full.finite);
  CHECK(full.length == 1);
  auto half = quotient_length(free2, {P("x", ctx)});
  CHECK(!half.finite);
  // Length additivity sanity: Q[x]/(x^n) has length n.
  for (std::uint32_t n = 1; n <= 10; ++n) {
    auto xc = q_context({"x"}, {1});
    auto r = ring_of(xc, {});
    std::vector<Polynomial> gen{P(("x^" + std::to_string(n)).c_str(), xc)};
    auto len = quotient_length(r, gen);
    REQUIRE(len.finite);
    CHECK(len.length == n);
  }
}

TEST_CASE("quotient length rejects inhomogeneous extras") {
  auto ctx = q_context({"x", "y"}, {1, 2});
  auto r = ring_of(ctx, {});
  CHECK_THROWS_AS(quotient_length(r, {P("x + y", ctx)}), ArgError);
}

TEST_CASE("multiplicity via reduction for the diagonal family") {
  SUBCASE("n = 1") {
    auto ctx = q_context({"s1", "x11"}, {3, 2});
    auto R = ring_of(ctx, {"s1^2 - x11^3"});
    CHECK(multiplicity_via_reduction(R, {P("x11", ctx)}) == 2);
  }
  SUBCASE("n = 2") {
    auto ctx = q_context({"s1", "s2", "x11", "x12", "x22"}, {3, 3, 2, 2, 2});
    auto R = ring_of(ctx, {"s1^2 - x11^3", "s1*s2 - x12^3", "s2^2 - x22^3"});
    CHECK(multiplicity_via_reduction(R, {P("x11", ctx), P("x22", ctx)}) == 12);
  }
  SUBCASE("regular ring has multiplicity 1") {
    auto ctx = q_context({"x", "y"}, {1, 1});
    auto R = ring_of(ctx, {});
    CHECK(multiplicity_via_reduction(R, {P("x", ctx), P("y", ctx)}) == 1);
  }
  SUBCASE("wrong parameter count") {
    auto ctx = q_context({"x", "y"}, {1, 1});
    auto R = ring_of(ctx, {});
    CHECK_THROWS_AS(multiplicity_via_reduction(R, {P("x", ctx)}), ArgError);
  }
  SUBCASE("not a system of parameters") {
    auto ctx = q_context({"x", "y"}, {1, 1});
    auto R = ring_of(ctx, {});
    CHECK_THROWS_AS(multiplicity_via_reduction(R, {P("x", ctx), P("x^2", ctx)}), ArgError);
  }
}

TEST_CASE("multiplication surjectivity in the complete-intersection ring") {
  RingPresentation S = ci_ring("s*t - (y^3 + x^2*z)");
  auto r22 = multiplication_surjective(S, 2, 2);
  CHECK(r22.surjective);
  for (std::uint64_t j = 2; j <= 8; ++j) {
    CHECK(multiplication_surjective(S, 2, j).surjective);
  }
}

TEST_CASE("weighted plane misses y^2 in degree 6") {
  auto ctx = q_context({"x", "y"}, {2, 3});
  auto R = ring_of(ctx, {});
  auto r = multiplication_surjective(R, 2, 4);
  CHECK(!r.surjective);
  REQUIRE(r.missing.has_value());
  CHECK(r.missing->to_string(ctx->table) == "y^2");
  CHECK(r.dim_target == 2);
  CHECK(r.rank == 1);
}

TEST_CASE("single-variable rings are trivially surjective") {
  auto ctx = q_context({"x"}, {1});
  auto R = ring_of(ctx, {});
  CHECK(multiplication_surjective(R, 1, 1).surjective);
  auto ctx2 = q_context({"x"}, {2});
  auto R2 = ring_of(ctx2, {});
  for (std::uint64_t j = 2; j <= 6; ++j) {
    CHECK(multiplication_surjective(R2, 2, j).surjective);
  }
  CHECK_THROWS_AS(multiplication_surjective(R, 0, 1), ArgError);
}

TEST_CASE("truncation power check") {
  SUBCASE("complete-intersection ring, a = 2") {
    RingPresentation S = ci_ring("s*t - (y^3 + x^2*z)");
    auto t = truncation_power_check(S, 2, 3);
    CHECK(t.ok);
    CHECK(t.failures.empty());
  }
  SUBCASE("single variable, a = 1") {
    auto ctx = q_context({"x"}, {1});
    auto R = ring_of(ctx, {});
    CHECK(truncation_power_check(R, 1, 5).ok);
  }
  SUBCASE("weighted plane fails at j = 3, degree 6") {
    auto ctx = q_context({"x", "y"}, {2, 3});
    auto R = ring_of(ctx, {});
    auto t = truncation_power_check(R, 2, 3);
    CHECK(!t.ok);
    bool found = false;
    for (const auto& f : t.failures) {
      if (f.power == 3 && f.degree == 6) {
        found = true;
        REQUIRE(f.missing.has_value());
        CHECK(f.missing->to_string(ctx->table) == "y^2");
      }
    }
    CHECK(found);
  }
}

TEST_CASE("module generation check certifies S over k[S_2] with generators 1, s, t") {
  RingPresentation S = ci_ring("s*t - (y^3 + x^2*z)");
  auto ctx = S.context();
  std::vector<Polynomial> gens{P("1", ctx), P("s", ctx), P("t", ctx)};
  auto span = module_generation_check(S, 2, gens, 24);
  CHECK(span.ok);

  // Dropping s breaks generation in odd degrees.
  std::vector<Polynomial> too_few{P("1", ctx), P("t", ctx)};
  auto missing = module_generation_check(S, 2, too_few, 24);
  CHECK(!missing.ok);
  REQUIRE(missing.first_failure_degree.has_value());
  CHECK(*missing.first_failure_degree == 3);
}

TEST_CASE("row space rank and pivotless column tracking") {
  auto field = CoefficientField::rationals();
  RowSpace space(field, 3);
  CHECK(space.insert({Coeff(1), Coeff(1), Coeff(0)}));
  CHECK(!space.insert({Coeff(2), Coeff(2), Coeff(0)}));
  CHECK(space.insert({Coeff(0), Coeff(0), Coeff(5)}));
  CHECK(space.rank() == 2);
  REQUIRE(space.first_pivotless_column().has_value());
  CHECK(*space.first_pivotless_column() == 1);
  CHECK(space.contains({Coeff(3), Coeff(3), Coeff(10)}));
  CHECK(!space.contains({Coeff(0), Coeff(1), Coeff(0)}));
}
