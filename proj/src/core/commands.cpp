#include "commands.hpp"

#include "errors.hpp"
#include "parse.hpp"

namespace ultk {

namespace {

std::vector<Polynomial> parse_over(const LoadedPresentation& p,
                                   const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, p.ring.context()));
  return out;
}

Json json_of_ring(const RingPresentation& ring) {
  Json vars = Json::array();
  for (std::size_t i = 0; i < ring.table().size(); ++i) {
    vars.push_back(Json::array({ring.table().name(i), ring.table().weight(i)}));
  }
  Json rels = Json::array();
  for (const auto& r : ring.relations()) rels.push_back(r.to_string());
  return Json{{"field", ring.field().describe()}, {"variables", vars}, {"relations", rels}};
}

}  // namespace

CommandOutcome cmd_hilbert(const LoadedPresentation& p) {
  HilbertSeries hs = hilbert_series(p.ring);
  // Degreewise cross-check against the component bases, per the series
  // contract.
  std::size_t bound = 20;
  auto coeffs = hs.expand(bound);
  Json cross = Json::array();
  for (std::size_t d = 0; d <= bound; ++d) {
    std::size_t dim = p.ring.component_dimension(d);
    if (coeffs[d] != static_cast<long>(dim)) {
      throw Error("internal: Hilbert series coefficient mismatch at degree " +
                  std::to_string(d));
    }
    cross.push_back(Json::array({d, dim}));
  }
  Json result{{"ring", json_of_ring(p.ring)},
              {"series", json_of_hilbert(hs)},
              {"component_dimensions", cross}};
  return {result, true};
}

CommandOutcome cmd_dim(const LoadedPresentation& p) {
  unsigned d = krull_dim(p.ring);
  return {Json{{"ring", json_of_ring(p.ring)}, {"dimension", d}}, true};
}

CommandOutcome cmd_ci_check(const LoadedPresentation& p) {
  auto w = is_complete_intersection(p.ring);
  Json result{{"ring", json_of_ring(p.ring)}, {"complete_intersection", json_of_ci(w)}};
  return {result, w.is_ci};
}

CommandOutcome cmd_length(const LoadedPresentation& p, const std::vector<std::string>& gens) {
  std::vector<Polynomial> extra = gens.empty() ? p.params : parse_over(p, gens);
  auto len = quotient_length(p.ring, extra);
  Json extra_json = Json::array();
  for (const auto& g : extra) extra_json.push_back(g.to_string());
  Json result{{"ring", json_of_ring(p.ring)},
              {"extra_generators", extra_json},
              {"finite", len.finite}};
  if (len.finite) result["length"] = len.length;
  return {result, true};
}

CommandOutcome cmd_multiplicity(const LoadedPresentation& p,
                                const std::vector<std::string>& params) {
  std::vector<Polynomial> ps = params.empty() ? p.params : parse_over(p, params);
  std::uint64_t mult = multiplicity_via_reduction(p.ring, ps);
  Json params_json = Json::array();
  for (const auto& g : ps) params_json.push_back(g.to_string());
  Json result{
      {"ring", json_of_ring(p.ring)},
      {"parameters", params_json},
      {"multiplicity", mult},
      {"caveats",
       Json::array(
           {"machine-checked: the parameters form a homogeneous system of parameters "
            "(finite colength)",
            "equals the Hilbert-Samuel multiplicity only under the unchecked hypotheses "
            "that the parameters generate a reduction of the maximal ideal and the ring "
            "is Cohen-Macaulay"})}};
  return {result, true};
}

CommandOutcome cmd_gap(const LoadedPresentation& p, std::uint64_t a) {
  GapReport g = check_gap_condition(p.ring, a);
  return {Json{{"ring", json_of_ring(p.ring)}, {"gap", json_of_gap(g)}, {"ok", g.ok}}, g.ok};
}

CommandOutcome cmd_surjectivity(const LoadedPresentation& p, std::uint64_t a,
                                std::optional<std::uint64_t> j,
                                std::optional<std::uint64_t> j_max) {
  if (j && j_max) throw ArgError("surjectivity: pass either --j or --jmax, not both");
  if (j) {
    SurjectivityResult r = multiplication_surjective(p.ring, a, *j);
    Json result{{"ring", json_of_ring(p.ring)},
                {"check", json_of_surjectivity(r, a, *j, p.ring.table())}};
    return {result, r.surjective};
  }
  std::uint64_t max_rel_degree = 0;
  for (const auto& r : p.ring.relations()) {
    std::uint64_t d = 0;
    r.is_homogeneous(&d);
    max_rel_degree = std::max(max_rel_degree, d);
  }
  std::uint64_t bound = j_max.value_or(4 * a + max_rel_degree);
  ConditionReport c = check_surjectivity_condition(p.ring, a, bound, p.module_gens);
  Json result{{"ring", json_of_ring(p.ring)},
              {"condition", json_of_condition(c, p.ring.table())}};
  return {result, c.status != SurjectivityStatus::Failed};
}

CommandOutcome cmd_truncation(const LoadedPresentation& p, std::uint64_t a,
                              std::uint64_t j_max) {
  TruncationResult t = truncation_power_check(p.ring, static_cast<unsigned>(a),
                                              static_cast<unsigned>(j_max));
  Json result{{"ring", json_of_ring(p.ring)},
              {"truncation", json_of_truncation(t, p.ring.table())}};
  return {result, t.ok};
}

CommandOutcome cmd_section_cert(const LoadedPresentation& p) {
  if (!p.has_section_certificate()) {
    throw ArgError("presentation file carries no section-ring certificate (param/unit lines)");
  }
  SectionCertReport s = verify_section_ring_certificate(p.ring, p.section_certificate());
  Json params = Json::array();
  for (const auto& q : p.params) params.push_back(q.to_string());
  Json result{{"ring", json_of_ring(p.ring)},
              {"params", params},
              {"certificate", json_of_section(s)}};
  return {result, s.ok};
}

CommandOutcome cmd_newton(const std::string& poly_text, const std::string& var1,
                          const std::string& var2) {
  if (!VariableTable::is_identifier(var1) || !VariableTable::is_identifier(var2) ||
      var1 == var2) {
    throw ArgError("newton: need two distinct variable names");
  }
  VariableTable table({var1, var2}, {1, 1});
  auto ctx = make_context(table, CoefficientField::rationals());
  Polynomial p = parse_polynomial(poly_text, ctx);
  IrreducibilityVerdict v = irreducibility_verdict(p, 0, 1);
  Json result{{"polynomial", p.to_string()},
              {"variables", Json::array({var1, var2})},
              {"irreducibility", json_of_irreducibility(v)}};
  return {result, v.kind == IrreducibilityVerdict::Kind::Irreducible};
}

CommandOutcome cmd_kernel_verify(const LoadedMap& map) {
  IdealPresentation kernel = kernel_of_ring_map(map.source, map.target, map.field, map.images);
  Json gens = Json::array();
  for (const auto& g : kernel.generators) gens.push_back(g.to_string());
  Json expected = Json::array();
  for (const auto& g : map.expected) expected.push_back(g.to_string());

  IdealPresentation expected_ideal(make_context(map.source, map.field), map.expected);
  bool equal = ideal_equal(kernel, expected_ideal);
  Json result{{"kernel_generators", gens}, {"expected_generators", expected}, {"equal", equal}};
  return {result, equal};
}

ZPoly parse_integer_poly(const std::string& text) {
  VariableTable table({"t"}, {1});
  auto ctx = make_context(table, CoefficientField::rationals());
  Polynomial p = parse_polynomial(text, ctx);
  std::size_t deg = p.is_zero() ? 0 : static_cast<std::size_t>(*p.weighted_degree());
  std::vector<mpz_class> coeffs(deg + 1, mpz_class(0));
  for (const auto& t : p.terms()) {
    if (t.coeff.get_den() != 1) {
      throw ArgError("cyclotomic test input must have integer coefficients");
    }
    coeffs[t.mono.exponent(0)] = t.coeff.get_num();
  }
  return ZPoly(std::move(coeffs));
}

CommandOutcome cmd_cyclotomic(const std::string& poly_text) {
  ZPoly p = parse_integer_poly(poly_text);
  CyclotomicFactorization f = cyclotomic_product_test(p);
  Json result{{"polynomial", p.to_string()}, {"analysis", json_of_cyclotomic(f)}};
  return {result, f.is_product};
}

CommandOutcome cmd_verdict(const LoadedPresentation& p, std::uint64_t a, std::uint64_t j_max,
                           bool acknowledge) {
  VerdictConfig cfg;
  cfg.a = a;
  cfg.j_max = j_max;
  cfg.acknowledge_assumptions = acknowledge;
  cfg.module_gens = p.module_gens;
  if (p.has_section_certificate()) cfg.section_cert = p.section_certificate();
  UlrichVerdict v = ulrich_verdict(p.ring, cfg);
  Json result{{"ring", json_of_ring(p.ring)},
              {"verdict", json_of_verdict(v, p.ring.table())}};
  return {result, v.conclusion == UlrichVerdict::Conclusion::NoUlrichModules};
}

CommandOutcome cmd_rees(const LoadedPresentation& p, const std::vector<std::string>& ideal_gens,
                        const std::vector<std::string>& expected_relations) {
  std::vector<Polynomial> gens = parse_over(p, ideal_gens);
  ReesPresentation rees = rees_presentation(p.ring, gens);
  bool vanish = rees_relations_vanish(rees);

  Json rels = Json::array();
  for (const auto& r : rees.result.relations()) rels.push_back(r.to_string());
  Json result{{"base", json_of_ring(p.ring)},
              {"t_names", rees.t_names},
              {"generator_degrees", rees.gen_degrees},
              {"relations", rels},
              {"presentation",
               serialize_presentation(LoadedPresentation{rees.result, {}, {}, {}})},
              {"relations_vanish_on_rees_algebra", vanish}};
  bool passed = vanish;
  if (!expected_relations.empty()) {
    std::vector<Polynomial> expected;
    for (const auto& t : expected_relations) {
      expected.push_back(parse_polynomial(t, rees.result.context()));
    }
    bool equal = ideal_equal(rees.result.relation_ideal(),
                             IdealPresentation(rees.result.context(), expected));
    result["matches_expected"] = equal;
    passed = passed && equal;
  }
  return {result, passed};
}

CommandOutcome cmd_gr(const LoadedPresentation& p, const std::vector<std::string>& ideal_gens,
                      const std::vector<std::string>& expected_relations,
                      const std::vector<std::string>& surjection_relations) {
  std::vector<Polynomial> gens = parse_over(p, ideal_gens);
  GradedConePresentation gr = associated_graded(p.ring, gens);

  Json rels = Json::array();
  for (const auto& r : gr.result.relations()) rels.push_back(r.to_string());
  Json vars = Json::array();
  for (std::size_t i = 0; i < gr.result.table().size(); ++i) {
    vars.push_back(Json::array({gr.result.table().name(i), gr.result.table().weight(i)}));
  }
  Json result{{"base", json_of_ring(p.ring)},
              {"maximal_ideal_case", gr.maximal_ideal_case},
              {"renamed_to_base", gr.renamed_to_base},
              {"internal_degrees", gr.internal_degrees},
              {"variables", vars},
              {"relations", rels},
              {"presentation",
               serialize_presentation(LoadedPresentation{gr.result, {}, {}, {}})}};
  bool passed = true;
  if (!expected_relations.empty()) {
    std::vector<Polynomial> expected;
    for (const auto& t : expected_relations) {
      expected.push_back(parse_polynomial(t, gr.result.context()));
    }
    bool equal = ideal_equal(gr.result.relation_ideal(),
                             IdealPresentation(gr.result.context(), expected));
    result["matches_expected"] = equal;
    passed = passed && equal;
  }
  if (!surjection_relations.empty()) {
    // Verify the claimed surjection: each listed polynomial must map to 0 in
    // the computed gr, i.e. lie in its relation ideal.
    bool all_vanish = true;
    Json checks = Json::array();
    for (const auto& t : surjection_relations) {
      Polynomial img = parse_polynomial(t, gr.result.context());
      bool vanish = ideal_membership(img, gr.result.relation_ideal());
      checks.push_back(Json::array({t, vanish}));
      all_vanish = all_vanish && vanish;
    }
    result["surjection_checks"] = checks;
    result["surjection_verified"] = all_vanish;
    passed = passed && all_vanish;
  }
  return {result, passed};
}

}  // namespace ultk
