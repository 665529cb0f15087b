#include "report.hpp"

namespace ultk {

const char* const kToolVersion = "0.1.0";

std::string content_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

Json json_of_hilbert(const HilbertSeries& hs) {
  Json numerator = Json::array();
  for (std::size_t i = 0; i < hs.numerator.coefficients().size(); ++i) {
    const auto& c = hs.numerator.coefficients()[i];
    if (c != 0) numerator.push_back(Json::array({i, c.get_str()}));
  }
  return Json{{"numerator", hs.numerator.to_string()},
              {"numerator_terms", numerator},
              {"denominator_weights", hs.denominator_weights},
              {"display", hs.to_string()}};
}

Json json_of_ci(const CompleteIntersectionWitness& w) {
  Json out{{"is_complete_intersection", w.is_ci},
           {"variables", w.variable_count},
           {"relations", w.relation_count},
           {"dimension", w.dimension},
           {"relation_degrees", w.relation_degrees}};
  if (w.is_ci) {
    out["koszul_numerator"] = w.koszul_numerator.to_string();
    out["hilbert_identity"] = w.hilbert_identity;
  }
  return out;
}

Json json_of_gap(const GapReport& g) {
  Json dims = Json::array();
  for (const auto& [d, dim] : g.dims) dims.push_back(Json::array({d, dim}));
  return Json{{"ok", g.ok},
              {"a", g.a},
              {"degree_zero_is_k", g.degree_zero_is_k},
              {"component_dimensions", dims}};
}

Json json_of_surjectivity(const SurjectivityResult& r, std::uint64_t a, std::uint64_t j,
                          const VariableTable& table) {
  Json out{{"a", a},
           {"j", j},
           {"surjective", r.surjective},
           {"dim_a", r.dim_a},
           {"dim_j", r.dim_j},
           {"dim_target", r.dim_target},
           {"rank", r.rank}};
  if (r.missing) out["missing"] = r.missing->to_string(table);
  return out;
}

Json json_of_condition(const ConditionReport& c, const VariableTable& table) {
  Json checks = Json::array();
  for (const auto& [j, ok] : c.surjectivity) checks.push_back(Json::array({j, ok}));
  Json out{{"a", c.a},
           {"j_max", c.j_max},
           {"gap", json_of_gap(c.gap)},
           {"checks", checks},
           {"status", to_string(c.status)}};
  if (c.first_failed_j) out["first_failed_j"] = *c.first_failed_j;
  if (c.first_missing) out["first_missing"] = c.first_missing->to_string(table);
  out["module_check"] = Json{{"ran", c.module_check_ran},
                             {"ok", c.module_check_ok},
                             {"checked_up_to", c.module_checked_up_to},
                             {"generator_degrees", c.generator_degrees}};
  return out;
}

Json json_of_truncation(const TruncationResult& t, const VariableTable& table) {
  Json failures = Json::array();
  for (const auto& f : t.failures) {
    Json jf{{"power", f.power}, {"degree", f.degree}};
    if (f.missing) jf["missing"] = f.missing->to_string(table);
    failures.push_back(jf);
  }
  return Json{{"ok", t.ok},
              {"a", t.a},
              {"j_max", t.j_max},
              {"max_degree_checked", t.max_degree_checked},
              {"failures", failures}};
}

Json json_of_section(const SectionCertReport& s) {
  Json radical = Json::array();
  for (const auto& [name, ok] : s.radical_checks) radical.push_back(Json::array({name, ok}));
  Json units = Json::array();
  for (const auto& u : s.unit_checks) {
    units.push_back(Json{{"param_index", u.param_index},
                         {"degree_ok", u.degree_ok},
                         {"product_ok", u.product_ok},
                         {"unit_degree", u.unit_degree}});
  }
  Json out{{"ok", s.ok}, {"radical_checks", radical}, {"unit_checks", units}};
  if (!s.failure.empty()) out["failure"] = s.failure;
  return out;
}

Json json_of_verdict(const UlrichVerdict& v, const VariableTable& table) {
  Json hyps = Json::array();
  for (const auto& h : v.hypotheses) {
    hyps.push_back(Json{{"tag", h.tag}, {"status", to_string(h.status)}, {"detail", h.detail}});
  }
  Json out{{"conclusion", to_string(v.conclusion)},
           {"a", v.a},
           {"j_max", v.j_max},
           {"dimension", v.dimension},
           {"hypotheses", hyps},
           {"verified", v.verified},
           {"assumed", v.assumed},
           {"caveats", v.caveats}};
  Json artifacts{{"gap", json_of_gap(v.gap)},
                 {"surjectivity", json_of_condition(v.surjectivity, table)},
                 {"complete_intersection", json_of_ci(v.ci)}};
  if (v.section) artifacts["section_certificate"] = json_of_section(*v.section);
  out["artifacts"] = artifacts;
  return out;
}

Json json_of_cyclotomic(const CyclotomicFactorization& f) {
  Json out{{"is_cyclotomic_product", f.is_product}, {"sign", f.sign}};
  if (f.is_product) {
    Json factors = Json::array();
    std::string display = f.sign < 0 ? "-" : "";
    for (const auto& [n, m] : f.factors) {
      factors.push_back(Json::array({n, m}));
      display += "Phi_" + std::to_string(n) + (m > 1 ? "^" + std::to_string(m) : "");
    }
    out["factors"] = factors;
    out["display"] = display;
  } else if (f.obstruction) {
    out["obstruction"] = f.obstruction->to_string();
  }
  return out;
}

Json json_of_polygon(const LatticePolygon& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(Json::array({v.x, v.y}));
  Json points = Json::array();
  for (const auto& q : p.points()) points.push_back(Json::array({q.x, q.y}));
  return Json{{"vertices", vertices}, {"support", points}};
}

namespace {

const char* kind_name(IndecomposabilityVerdict::Kind k) {
  switch (k) {
    case IndecomposabilityVerdict::Kind::Indecomposable:
      return "indecomposable";
    case IndecomposabilityVerdict::Kind::Decomposable:
      return "decomposable";
    case IndecomposabilityVerdict::Kind::Unknown:
      return "unknown";
  }
  return "?";
}

const char* path_name(IndecomposabilityVerdict::Path p) {
  switch (p) {
    case IndecomposabilityVerdict::Path::PointVacuous:
      return "point-vacuous";
    case IndecomposabilityVerdict::Path::SegmentGcd:
      return "segment-gcd";
    case IndecomposabilityVerdict::Path::TriangleGcd:
      return "triangle-gcd";
    case IndecomposabilityVerdict::Path::ExhaustiveSearch:
      return "exhaustive-search";
    case IndecomposabilityVerdict::Path::None:
      return "none";
  }
  return "?";
}

}  // namespace

Json json_of_indecomposability(const IndecomposabilityVerdict& v) {
  Json out{{"verdict", kind_name(v.kind)}, {"path", path_name(v.path)}, {"note", v.note}};
  if (v.path == IndecomposabilityVerdict::Path::SegmentGcd ||
      v.path == IndecomposabilityVerdict::Path::TriangleGcd) {
    out["gcd"] = v.gcd_value;
  }
  if (v.witness) {
    out["witness"] = Json{{"summand_a", json_of_polygon(v.witness->first)},
                          {"summand_b", json_of_polygon(v.witness->second)}};
  }
  return out;
}

Json json_of_irreducibility(const IrreducibilityVerdict& v) {
  return Json{
      {"verdict", v.kind == IrreducibilityVerdict::Kind::Irreducible ? "irreducible" : "unknown"},
      {"stripped_content", Json::array({v.stripped_content.first, v.stripped_content.second})},
      {"polygon", json_of_polygon(v.polygon)},
      {"indecomposability", json_of_indecomposability(v.polytope_verdict)},
      {"note", v.note}};
}

Json make_report(const std::string& command, Json inputs, Json result, bool passed,
                 std::int64_t timing_ms) {
  return Json{{"command", command}, {"version", kToolVersion}, {"inputs", std::move(inputs)},
              {"result", std::move(result)}, {"passed", passed}, {"timing_ms", timing_ms}};
}

namespace {

void render_value(const Json& v, const std::string& indent, std::string& out);

void render_object(const Json& v, const std::string& indent, std::string& out) {
  for (const auto& [key, value] : v.items()) {
    out += indent + key + ":";
    if (value.is_object() || (value.is_array() && !value.empty() &&
                              (value[0].is_object() || value[0].is_array()))) {
      out += "\n";
      render_value(value, indent + "  ", out);
    } else {
      out += " ";
      render_value(value, "", out);
    }
  }
}

void render_value(const Json& v, const std::string& indent, std::string& out) {
  if (v.is_object()) {
    render_object(v, indent, out);
  } else if (v.is_array()) {
    bool scalars = true;
    for (const auto& e : v) {
      if (e.is_object() || e.is_array()) scalars = false;
    }
    if (scalars) {
      out += indent.empty() ? "" : indent + "- ";
      out += v.dump();
      out += "\n";
    } else {
      for (const auto& e : v) {
        if (e.is_object()) {
          out += indent + "-\n";
          render_value(e, indent + "  ", out);
        } else {
          out += indent + "- " + e.dump() + "\n";
        }
      }
    }
  } else if (v.is_string()) {
    out += v.get<std::string>() + "\n";
  } else {
    out += v.dump() + "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render_object(report, "", out);
  return out;
}

}  // namespace ultk
