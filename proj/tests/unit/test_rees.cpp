#include <doctest.h>

#include "core/hilbert.hpp"
#include "core/rees.hpp"
#include "helpers.hpp"

using namespace ultk;
using namespace ultk::testing;

namespace {

RingPresentation ring_of(const PolyContextPtr& ctx, std::initializer_list<const char*> rels) {
  std::vector<Polynomial> ps;
  for (const char* r : rels) ps.push_back(P(r, ctx));
  return RingPresentation(ctx->table, ctx->field, std::move(ps));
}

}  // namespace

TEST_CASE("rees algebra of the maximal ideal of the plane") {
  auto ctx = q_context({"x", "y"}, {1, 1});
  auto plane = ring_of(ctx, {});
  auto rees = rees_presentation(plane, {P("x", ctx), P("y", ctx)});
  CHECK(rees.t_names == std::vector<std::string>{"T1", "T2"});
  auto rctx = rees.result.context();
  CHECK(ideal_equal(rees.result.relation_ideal(),
                    IdealPresentation(rctx, {P("x*T2 - y*T1", rctx)})));
  CHECK(rees_relations_vanish(rees));
}

TEST_CASE("rees algebra of a principal ideal is a polynomial extension") {
  auto ctx = q_context({"x"}, {1});
  auto line = ring_of(ctx, {});
  auto rees = rees_presentation(line, {P("x", ctx)});
  CHECK(rees.result.relations().empty());
  CHECK(rees_relations_vanish(rees));
}

TEST_CASE("rees algebra of the squared maximal ideal") {
  auto ctx = q_context({"x", "y"}, {1, 1});
  auto plane = ring_of(ctx, {});
  auto rees = rees_presentation(plane, {P("x^2", ctx), P("x*y", ctx), P("y^2", ctx)});
  auto rctx = rees.result.context();
  IdealPresentation expected(
      rctx, {P("x*T2 - y*T1", rctx), P("x*T3 - y*T2", rctx), P("T2^2 - T1*T3", rctx)});
  CHECK(ideal_equal(rees.result.relation_ideal(), expected));
  CHECK(rees_relations_vanish(rees));
}

TEST_CASE("rees rejects zero and inhomogeneous generators") {
  auto ctx = q_context({"x", "y"}, {1, 2});
  auto plane = ring_of(ctx, {});
  CHECK_THROWS_AS(rees_presentation(plane, {Polynomial::zero(ctx)}), ArgError);
  CHECK_THROWS_AS(rees_presentation(plane, {P("x + y", ctx)}), ArgError);
}

TEST_CASE("the generated names T1..Tr are reserved") {
  auto ctx = q_context({"T1", "y"}, {1, 1});
  auto plane = ring_of(ctx, {});
  CHECK_THROWS_AS(rees_presentation(plane, {P("T1", ctx), P("y", ctx)}), ArgError);
}

TEST_CASE("associated graded of a polynomial ring at its maximal ideal is itself") {
  auto ctx = q_context({"x", "y"}, {1, 1});
  auto plane = ring_of(ctx, {});
  auto gr = associated_graded(plane, {P("x", ctx), P("y", ctx)});
  CHECK(gr.maximal_ideal_case);
  CHECK(gr.renamed_to_base);
  CHECK(gr.result.relations().empty());
  CHECK(hilbert_series(gr.result).numerator == hilbert_series(plane).numerator);
  CHECK(hilbert_series(gr.result).denominator_weights ==
        hilbert_series(plane).denominator_weights);
}

TEST_CASE("tangent cone of the quasi-homogeneous cusp") {
  auto ctx = q_context({"x", "y"}, {2, 3});
  auto cusp = ring_of(ctx, {"y^2 - x^3"});
  auto gr = associated_graded(cusp, {P("x", ctx), P("y", ctx)});
  CHECK(gr.maximal_ideal_case);
  CHECK(gr.renamed_to_base);
  auto gctx = gr.result.context();
  CHECK(gr.result.table().weights() == std::vector<std::uint32_t>{1, 1});
  CHECK(ideal_equal(gr.result.relation_ideal(),
                    IdealPresentation(gctx, {P("y^2", gctx)})));
  CHECK(gr.internal_degrees == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("gr of a standard graded quotient is the quotient itself") {
  auto ctx = q_context({"x", "y", "z"}, {1, 1, 1});
  auto cone = ring_of(ctx, {"x*y - z^2"});
  auto gr = associated_graded(cone, {P("x", ctx), P("y", ctx), P("z", ctx)});
  CHECK(gr.maximal_ideal_case);
  CHECK(gr.renamed_to_base);
  auto hs_base = hilbert_series(cone);
  auto hs_gr = hilbert_series(gr.result);
  CHECK(hs_base.numerator == hs_gr.numerator);
  CHECK(hs_base.denominator_weights == hs_gr.denominator_weights);
  // Standard grading: the regraded ring is literally the same presentation.
  auto gctx = gr.result.context();
  CHECK(ideal_equal(gr.result.relation_ideal(),
                    IdealPresentation(gctx, {P("x*y - z^2", gctx)})));
}

TEST_CASE("gr of the complete-intersection ring receives the expected surjection") {
  auto ctx = q_context({"s", "t", "x", "y", "z"}, {3, 3, 2, 2, 2});
  auto S = ring_of(ctx, {"s^2 - x^3", "s*t - (y^3 + x^2*z)", "t^2 - z^3"});
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < 5; ++i) vars.push_back(Polynomial::variable(ctx, i));
  auto gr = associated_graded(S, vars);
  CHECK(gr.maximal_ideal_case);
  CHECK(gr.renamed_to_base);
  auto gctx = gr.result.context();
  // Quotient map from k[s,t,x,y,z]/(s^2, st, t^2, x^3 z^3 - f^2): each listed
  // polynomial must vanish in the computed gr.
  for (const char* rel :
       {"s^2", "s*t", "t^2", "x^3*z^3 - (y^3 + x^2*z)^2"}) {
    CHECK(ideal_membership(P(rel, gctx), gr.result.relation_ideal()));
  }
}

TEST_CASE("non-maximal ideals keep the base variables in the presentation") {
  auto ctx = q_context({"x", "y"}, {1, 1});
  auto plane = ring_of(ctx, {});
  auto gr = associated_graded(plane, {P("x", ctx)});
  CHECK(!gr.maximal_ideal_case);
  // Presentation over x, y, T1 with the graph relation specialized.
  CHECK(gr.result.table().size() == 3);
}
