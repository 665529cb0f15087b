#include <doctest.h>

#include <optional>
#include <set>
#include <thread>

#include "helpers.hpp"

using namespace ultk;
using namespace ultk::testing;

namespace {

IdealPresentation ideal_of(const PolyContextPtr& ctx, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(g, ctx));
  return IdealPresentation(ctx, std::move(ps));
}

std::set<std::string> lm_strings(const GroebnerBasis& gb) {
  std::set<std::string> out;
  for (const auto& m : gb.leading_monomials()) out.insert(m.to_string(gb.context()->table));
  return out;
}

}  // namespace

TEST_CASE("principal and linear ideals reduce to the obvious bases") {
  auto ctx = q_context({"x", "y"}, {1, 1});
  auto gb1 = buchberger(ideal_of(ctx, {"x"}), ctx->order);
  REQUIRE(gb1.elements().size() == 1);
  CHECK(gb1.elements()[0] == P("x", ctx));

  auto gb2 = buchberger(ideal_of(ctx, {"x + y", "x - y"}), ctx->order);
  CHECK(lm_strings(gb2) == std::set<std::string>{"x", "y"});
}

TEST_CASE("hand-verified basis of (s^2, t^2, s t - y^3)") {
  // S-pair derivation: S(s^2, st-y^3) reduces to s*y^3, S(t^2, st-y^3) to
  // t*y^3, and S(st-y^3, s*y^3) to y^6; all further pairs reduce to zero.
  auto ctx = q_context({"s", "t", "y"}, {3, 3, 2});
  auto gb = buchberger(ideal_of(ctx, {"s^2", "t^2", "s*t - y^3"}), ctx->order);
  CHECK(lm_strings(gb) ==
        std::set<std::string>{"s^2", "t^2", "s*t", "s*y^3", "t*y^3", "y^6"});
  CHECK(buchberger_criterion_holds(gb));
}

TEST_CASE("normal forms against a principal basis") {
  auto ctx = q_context({"x", "y"}, {1, 1});
  auto gb = buchberger(ideal_of(ctx, {"x"}), ctx->order);
  CHECK(normal_form(P("x^2", ctx), gb).is_zero());
  CHECK(normal_form(P("y", ctx), gb) == P("y", ctx));
}

TEST_CASE("the defining relations reduce to zero in their own basis") {
  auto ctx = q_context({"s", "t", "x", "y", "z"}, {3, 3, 2, 2, 2});
  auto ideal = ideal_of(ctx, {"s^2 - x^3", "s*t - (y^3 + x^2*z)", "t^2 - z^3"});
  auto gb = buchberger(ideal, ctx->order);
  CHECK(normal_form(P("s*s - x^3", ctx), gb).is_zero());
  for (const auto& g : ideal.generators) {
    CHECK(normal_form(g, gb).is_zero());
  }
}

TEST_CASE("ideal membership examples") {
  auto ctx3 = q_context({"s", "t", "y"}, {3, 3, 2});
  auto ideal = ideal_of(ctx3, {"s^2", "t^2", "s*t - y^3"});
  // s*y^3 = s^2*t - s*(s*t - y^3).
  CHECK(ideal_membership(P("s*y^3", ctx3), ideal));
  CHECK(ideal_membership(P("0", ctx3), ideal));

  auto ctx2 = q_context({"x", "y"}, {1, 1});
  CHECK(!ideal_membership(P("y", ctx2), ideal_of(ctx2, {"x"})));
  CHECK(ideal_membership(Polynomial::zero(ctx2), ideal_of(ctx2, {"x"})));
}

TEST_CASE("radical membership via the auxiliary variable") {
  auto ctx = q_context({"x", "y"}, {1, 1});
  CHECK(radical_membership(P("x", ctx), ideal_of(ctx, {"x^2"})));
  CHECK(!radical_membership(P("y", ctx), ideal_of(ctx, {"x"})));

  // In the complete-intersection ring, y is in the radical of (x, z) + I.
  auto ci = q_context({"s", "t", "x", "y", "z"}, {3, 3, 2, 2, 2});
  auto combined = ideal_of(
      ci, {"s^2 - x^3", "s*t - (y^3 + x^2*z)", "t^2 - z^3", "x", "z"});
  CHECK(radical_membership(P("y", ci), combined));
  CHECK(radical_membership(P("s", ci), combined));
}

TEST_CASE("elimination computes the twisted-cubic-style kernel") {
  auto ctx = q_context({"x", "y", "u"}, {2, 3, 1});
  auto result = eliminate(ideal_of(ctx, {"x - u^2", "y - u^3"}), {"u"});
  REQUIRE(result.generators.size() == 1);
  auto sub = result.ctx;
  CHECK(ideal_equal(result, IdealPresentation(sub, {P("x^3 - y^2", sub)})));
  // Independent check: the generator vanishes under x -> u^2, y -> u^3.
  auto uctx = q_context({"u"}, {1});
  std::map<std::string, Polynomial> images{{"x", P("u^2", uctx)}, {"y", P("u^3", uctx)}};
  CHECK(result.generators[0].substitute(images, uctx).is_zero());
}

TEST_CASE("elimination edge cases") {
  auto ctx = q_context({"x", "u"}, {1, 1});
  // Isomorphism onto a polynomial subring has zero kernel.
  auto zero = eliminate(ideal_of(ctx, {"x - u"}), {"u"});
  CHECK(zero.generators.empty());
  // Empty drop set normalizes to the basis.
  auto same = eliminate(ideal_of(ctx, {"x - u"}), {});
  CHECK(ideal_equal(same, ideal_of(ctx, {"x - u"})));
  CHECK_THROWS_AS(eliminate(ideal_of(ctx, {"x"}), {"nope"}), ArgError);
}

TEST_CASE("kernel of ring maps") {
  auto field = CoefficientField::rationals();
  SUBCASE("cuspidal cubic") {
    VariableTable src({"x", "y"}, {2, 3});
    VariableTable tgt({"u"}, {1});
    auto tctx = make_context(tgt, field);
    auto ker = kernel_of_ring_map(src, tgt, field, {P("u^2", tctx), P("u^3", tctx)});
    CHECK(ideal_equal(ker, IdealPresentation(ker.ctx, {P("x^3 - y^2", ker.ctx)})));
  }
  SUBCASE("single variable map has zero kernel") {
    VariableTable src({"x"}, {1});
    VariableTable tgt({"u"}, {1});
    auto tctx = make_context(tgt, field);
    auto ker = kernel_of_ring_map(src, tgt, field, {P("u", tctx)});
    CHECK(ker.generators.empty());
  }
  SUBCASE("five-variable monomial parametrization") {
    VariableTable src({"s", "t", "x", "y", "z"}, {3, 3, 2, 2, 2});
    VariableTable tgt({"u", "v"}, {1, 1});
    auto tctx = make_context(tgt, field);
    auto ker = kernel_of_ring_map(
        src, tgt, field,
        {P("u^3", tctx), P("v^3", tctx), P("u^2", tctx), P("u*v", tctx), P("v^2", tctx)});
    auto sctx = ker.ctx;
    IdealPresentation expected(
        sctx, {P("s^2 - x^3", sctx), P("s*t - x*y*z", sctx), P("z^3 - t^2", sctx),
               P("y^2 - x*z", sctx), P("s*z^2 - x*y*t", sctx), P("y*z*s - x^2*t", sctx)});
    CHECK(ideal_equal(ker, expected));
    // The f = y^3 relations are contained in the kernel prime.
    IdealPresentation y3_relations(
        sctx, {P("s^2 - x^3", sctx), P("s*t - y^3", sctx), P("t^2 - z^3", sctx)});
    CHECK(ideal_contains(expected, y3_relations));
  }
}

TEST_CASE("ideal equality") {
  auto ctx = q_context({"x", "y"}, {1, 1});
  CHECK(ideal_equal(ideal_of(ctx, {"x", "y"}), ideal_of(ctx, {"y", "x"})));
  CHECK(!ideal_equal(ideal_of(ctx, {"x"}), ideal_of(ctx, {"x^2"})));
  CHECK(ideal_contains(ideal_of(ctx, {"x"}), ideal_of(ctx, {"x^2"})));
}

TEST_CASE("buchberger criterion and reduction properties on random ideals") {
  Rng rng(314159);
  auto ctx = q_context({"x", "y", "z"}, {1, 1, 1});
  // Hard random instances may legitimately exhaust the budget; they are
  // skipped and counted, and at least 200 completed bases are required.
  GbBudget cap;
  cap.max_steps = 2'000'000;
  cap.max_basis = 2000;
  int nontrivial = 0;
  for (int iter = 0; iter < 240; ++iter) {
    std::vector<Polynomial> gens;
    std::size_t count = 1 + rng.below(3);
    for (std::size_t i = 0; i < count; ++i) {
      gens.push_back(random_poly(rng, ctx, 4, 4));
    }
    IdealPresentation ideal(ctx, std::move(gens));
    if (ideal.generators.empty()) continue;
    std::optional<GroebnerBasis> maybe_gb;
    try {
      maybe_gb = buchberger(ideal, ctx->order, cap);
    } catch (const BudgetExceeded&) {
      continue;
    }
    const GroebnerBasis& gb = *maybe_gb;
    ++nontrivial;
    CHECK(buchberger_criterion_holds(gb));
    // Containment soundness.
    for (const auto& g : ideal.generators) {
      CHECK(normal_form(g, gb).is_zero());
    }
    // Normal-form idempotence, difference membership, and membership
    // consistency.
    Polynomial probe = random_poly(rng, ctx, 4, 3);
    Polynomial nf = normal_form(probe, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(normal_form(probe - nf, gb).is_zero());
    if (normal_form(probe, gb).is_zero()) {
      Polynomial q = random_poly(rng, ctx, 3, 2);
      CHECK(normal_form(probe * q, gb).is_zero());
    }
    // Reduced basis: monic elements, no term divisible by another leading
    // monomial.
    for (std::size_t i = 0; i < gb.elements().size(); ++i) {
      CHECK(gb.elements()[i].leading_term().coeff == 1);
      for (const auto& term : gb.elements()[i].terms()) {
        for (std::size_t j = 0; j < gb.elements().size(); ++j) {
          if (i == j) continue;
          CHECK(!gb.elements()[j].leading_monomial().divides(term.mono));
        }
      }
    }
  }
  CHECK(nontrivial >= 200);
}

TEST_CASE("basis and source generate the same ideal, checked through a second order") {
  auto ctx = q_context({"s", "t", "x", "y", "z"}, {3, 3, 2, 2, 2});
  auto ideal = ideal_of(ctx, {"s^2 - x^3", "s*t - (y^3 + x^2*z)", "t^2 - z^3"});
  auto gb = buchberger(ideal, ctx->order);
  // Independent route: a block order computes a different basis of the same
  // ideal; both bases must reduce each other's elements to zero.
  MonomialOrder block = MonomialOrder::block({true, false, false, false, false},
                                             MonomialOrder::weighted_grevlex());
  auto gb_block = buchberger(ideal, block);
  for (const auto& g : gb.elements()) {
    CHECK(normal_form(g, gb_block).is_zero());
  }
  for (const auto& g : gb_block.elements()) {
    CHECK(normal_form(g.with_context(ctx), gb).is_zero());
  }
}

TEST_CASE("buchberger is deterministic") {
  auto ctx = q_context({"s", "t", "x", "y", "z"}, {3, 3, 2, 2, 2});
  auto ideal = ideal_of(ctx, {"s^2 - x^3", "s*t - (y^3 + x^2*z)", "t^2 - z^3"});
  auto gb1 = buchberger(ideal, ctx->order);
  auto gb2 = buchberger(ideal, ctx->order);
  REQUIRE(gb1.elements().size() == gb2.elements().size());
  for (std::size_t i = 0; i < gb1.elements().size(); ++i) {
    CHECK(gb1.elements()[i] == gb2.elements()[i]);
    CHECK(gb1.elements()[i].to_string() == gb2.elements()[i].to_string());
  }
}

TEST_CASE("cached bases are safe for concurrent lookup") {
  auto ctx = q_context({"s", "t", "x", "y", "z"}, {3, 3, 2, 2, 2});
  auto ideal = ideal_of(ctx, {"s^2 - x^3", "s*t - 7*y^3", "t^2 - z^3"});
  std::vector<std::thread> workers;
  std::vector<std::string> prints(8);
  for (int i = 0; i < 8; ++i) {
    workers.emplace_back([&, i] {
      const GroebnerBasis& gb = buchberger_cached(ideal, ctx->order);
      std::string all;
      for (const auto& g : gb.elements()) all += g.to_string() + ";";
      prints[i] = all;
    });
  }
  for (auto& w : workers) w.join();
  for (int i = 1; i < 8; ++i) {
    CHECK(prints[i] == prints[0]);
  }
  CHECK(!prints[0].empty());
}

TEST_CASE("budget exhaustion raises a distinct error") {
  auto ctx = q_context({"x", "y", "z"}, {1, 1, 1});
  // Leading monomials overlap, so S-pairs genuinely reduce and consume steps.
  auto ideal = ideal_of(ctx, {"x^2*y - 1", "x*y^2 - 1"});
  GbBudget tiny;
  tiny.max_steps = 3;
  CHECK_THROWS_AS(buchberger(ideal, ctx->order, tiny), BudgetExceeded);
  GbBudget one_element;
  one_element.max_basis = 1;
  CHECK_THROWS_AS(buchberger(ideal, ctx->order, one_element), BudgetExceeded);
  // The same computation succeeds with the default budget.
  CHECK(buchberger(ideal, ctx->order).elements().size() >= 2);
}
