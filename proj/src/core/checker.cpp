#include "checker.hpp"

#include <algorithm>

#include "errors.hpp"

namespace ultk {

SectionCertReport verify_section_ring_certificate(const RingPresentation& ring,
                                                  const SectionRingCertificate& cert,
                                                  const GbBudget& budget) {
  SectionCertReport report;
  if (cert.params.empty()) {
    report.failure = "certificate has no parameters";
    return report;
  }
  if (cert.units.size() != cert.params.size()) {
    report.failure = "need exactly one unit certificate per parameter";
    return report;
  }

  // Radical condition: every variable lies in sqrt((params) + relations).
  std::vector<Polynomial> gens = ring.relations();
  for (const auto& p : cert.params) {
    if (p.is_zero() || !p.with_context(ring.context()).is_homogeneous()) {
      report.failure = "parameters must be nonzero and weighted-homogeneous";
      return report;
    }
    gens.push_back(p.with_context(ring.context()));
  }
  IdealPresentation combined(ring.context(), std::move(gens));
  bool radical_ok = true;
  for (std::size_t v = 0; v < ring.table().size(); ++v) {
    bool in_radical =
        radical_membership(Polynomial::variable(ring.context(), v), combined, budget);
    report.radical_checks.emplace_back(ring.table().name(v), in_radical);
    radical_ok = radical_ok && in_radical;
  }
  if (!radical_ok) {
    report.failure = "radical of (params) + relations misses a variable";
  }

  const GroebnerBasis& gb = ring.groebner(budget);
  bool units_ok = true;
  for (std::size_t i = 0; i < cert.params.size(); ++i) {
    const UnitCertificate& uc = cert.units[i];
    SectionCertReport::UnitCheck check;
    check.param_index = i;

    Polynomial x = cert.params[i].with_context(ring.context());
    Polynomial a = uc.numerator.with_context(ring.context());
    Polynomial b = uc.inverse_numerator.with_context(ring.context());
    std::uint64_t dx = 0, da = 0;
    if (!x.is_homogeneous(&dx) || !a.is_homogeneous(&da) || a.is_zero()) {
      units_ok = false;
      report.unit_checks.push_back(check);
      continue;
    }
    check.unit_degree = static_cast<std::int64_t>(da) -
                        static_cast<std::int64_t>(uc.denominator_power) *
                            static_cast<std::int64_t>(dx);
    check.degree_ok = check.unit_degree == 1;

    Polynomial product = a * b - x.pow(uc.denominator_power + uc.inverse_power);
    check.product_ok = normal_form(product, gb).is_zero();
    units_ok = units_ok && check.degree_ok && check.product_ok;
    report.unit_checks.push_back(check);
  }
  if (!units_ok && report.failure.empty()) {
    report.failure = "a unit certificate failed its degree or product check";
  }
  report.ok = radical_ok && units_ok;
  return report;
}

GapReport check_gap_condition(const RingPresentation& ring, std::uint64_t a,
                              const GbBudget& budget) {
  if (a < 2) throw ArgError("gap condition: require a >= 2");
  GapReport report;
  report.a = a;
  bool ok = true;
  for (std::uint64_t d = 0; d < a; ++d) {
    std::size_t dim = ring.component_dimension(d, budget);
    report.dims.emplace_back(d, dim);
    if (d == 0) {
      report.degree_zero_is_k = dim == 1;
      ok = ok && report.degree_zero_is_k;
    } else {
      ok = ok && dim == 0;
    }
  }
  report.ok = ok;
  return report;
}

ConditionReport check_surjectivity_condition(const RingPresentation& ring, std::uint64_t a,
                                             std::uint64_t j_max,
                                             const std::vector<Polynomial>& module_gens,
                                             const GbBudget& budget) {
  if (a < 2) throw ArgError("surjectivity condition: require a >= 2");
  if (j_max < a) throw ArgError("surjectivity condition: require j_max >= a");
  ConditionReport report;
  report.gap = check_gap_condition(ring, a, budget);
  report.a = a;
  report.j_max = j_max;

  bool all_ok = true;
  for (std::uint64_t j = a; j <= j_max; ++j) {
    SurjectivityResult r = multiplication_surjective(ring, a, j, budget);
    report.surjectivity.emplace_back(j, r.surjective);
    if (!r.surjective && all_ok) {
      all_ok = false;
      report.first_failed_j = j;
      report.first_missing = r.missing;
    }
  }
  if (!all_ok) {
    report.status = SurjectivityStatus::Failed;
    return report;
  }

  if (!module_gens.empty()) {
    std::uint64_t bound = j_max + 2 * a;
    ModuleSpanResult span = module_generation_check(ring, a, module_gens, bound, budget);
    report.module_check_ran = true;
    report.module_check_ok = span.ok;
    report.module_checked_up_to = bound;
    std::uint64_t max_gen_degree = 0;
    for (const auto& g : module_gens) {
      std::uint64_t d = 0;
      g.with_context(ring.context()).is_homogeneous(&d);
      report.generator_degrees.push_back(d);
      max_gen_degree = std::max(max_gen_degree, d);
    }
    // The finite argument applies to every j beyond the direct range only
    // when each generator degree stays below it.
    if (span.ok && max_gen_degree <= j_max) {
      report.status = SurjectivityStatus::CertifiedForAllJ;
      return report;
    }
  }
  report.status = SurjectivityStatus::VerifiedUpToBound;
  return report;
}

namespace {

std::uint64_t default_a(const RingPresentation& ring, const GbBudget& budget) {
  std::uint64_t max_weight = 0;
  for (auto w : ring.table().weights()) max_weight = std::max<std::uint64_t>(max_weight, w);
  for (std::uint64_t d = 1; d <= max_weight; ++d) {
    if (ring.component_dimension(d, budget) > 0) return std::max<std::uint64_t>(d, 2);
  }
  return 2;
}

}  // namespace

UlrichVerdict ulrich_verdict(const RingPresentation& ring, const VerdictConfig& config,
                             const GbBudget& budget) {
  UlrichVerdict verdict;
  std::uint64_t a = config.a > 0 ? config.a : default_a(ring, budget);
  std::uint64_t max_rel_degree = 0;
  for (const auto& r : ring.relations()) {
    std::uint64_t d = 0;
    r.is_homogeneous(&d);
    max_rel_degree = std::max(max_rel_degree, d);
  }
  std::uint64_t j_max = config.j_max > 0 ? config.j_max : 4 * a + max_rel_degree;
  j_max = std::max(j_max, a);
  verdict.a = a;
  verdict.j_max = j_max;

  auto add = [&](const std::string& tag, HypothesisStatus status, const std::string& detail) {
    verdict.hypotheses.push_back(HypothesisEntry{tag, status, detail});
    if (status == HypothesisStatus::Verified) verdict.verified.push_back(tag);
    if (status == HypothesisStatus::Assumed) verdict.assumed.push_back(tag);
  };

  // 1. Dimension.
  verdict.dimension = krull_dim(ring, budget);
  add("dimension", verdict.dimension >= 2 ? HypothesisStatus::Verified : HypothesisStatus::Failed,
      "Krull dimension = " + std::to_string(verdict.dimension) + " (need >= 2)");

  // 2. Gap condition.
  verdict.gap = check_gap_condition(ring, a, budget);
  add("gap-condition",
      verdict.gap.ok ? HypothesisStatus::Verified : HypothesisStatus::Failed,
      "S_0 = k and S_j = 0 for 1 <= j <= " + std::to_string(a - 1));

  // 3. Surjectivity of S_a (x) S_j -> S_{a+j} for all j >= a.
  verdict.surjectivity = check_surjectivity_condition(ring, a, j_max, config.module_gens, budget);
  switch (verdict.surjectivity.status) {
    case SurjectivityStatus::CertifiedForAllJ:
      add("surjectivity", HypothesisStatus::Verified,
          "multiplication maps surjective for " + std::to_string(a) + " <= j <= " +
              std::to_string(j_max) + "; module-generation certificate extends this to all j");
      break;
    case SurjectivityStatus::VerifiedUpToBound:
      add("surjectivity",
          config.acknowledge_assumptions ? HypothesisStatus::Assumed
                                         : HypothesisStatus::Unverified,
          "verified only for " + std::to_string(a) + " <= j <= " + std::to_string(j_max) +
              "; no finite-generation certificate for larger j");
      break;
    case SurjectivityStatus::Failed:
      add("surjectivity", HypothesisStatus::Failed,
          "multiplication map fails at j = " +
              (verdict.surjectivity.first_failed_j
                   ? std::to_string(*verdict.surjectivity.first_failed_j)
                   : std::string("?")));
      break;
  }

  // 4. Section-ring certificate (ample line bundle on Proj).
  if (config.section_cert) {
    verdict.section = verify_section_ring_certificate(ring, *config.section_cert, budget);
    add("section-ring",
        verdict.section->ok ? HypothesisStatus::Verified : HypothesisStatus::Failed,
        verdict.section->ok
            ? "radical of (params) is the irrelevant ideal and every localization has a "
              "degree-1 unit (identifies the ring as a section ring given depth >= 2)"
            : verdict.section->failure);
  } else {
    add("section-ring", HypothesisStatus::Unverified,
        "no section-ring certificate supplied (params + degree-1 units required)");
  }

  // 5. Depth >= 2, through the complete-intersection route.
  verdict.ci = is_complete_intersection(ring, budget);
  if (verdict.ci.is_ci && verdict.dimension >= 2) {
    add("depth", HypothesisStatus::Verified,
        "complete intersection (codim " +
            std::to_string(verdict.ci.variable_count - verdict.ci.dimension) + " = " +
            std::to_string(verdict.ci.relation_count) +
            " relations), hence Cohen-Macaulay with depth = dim >= 2");
  } else if (config.acknowledge_assumptions) {
    add("depth", HypothesisStatus::Assumed,
        "depth >= 2 assumed (not a complete intersection; no machine check available)");
  } else {
    add("depth", HypothesisStatus::Unverified,
        "not certified as a complete intersection; depth >= 2 unverified");
  }

  if (!ring.field().is_rationals()) {
    const mpz_class& p = ring.field().characteristic();
    verdict.caveats.push_back(
        "coefficient field has characteristic " + p.get_str() +
        (p >= 5 ? "; the verified criteria apply verbatim"
                : "; characteristic 2 and 3 degeneracies are not separately analyzed"));
  }

  bool all_ok = std::all_of(verdict.hypotheses.begin(), verdict.hypotheses.end(),
                            [](const HypothesisEntry& h) {
                              return h.status == HypothesisStatus::Verified ||
                                     h.status == HypothesisStatus::Assumed;
                            });
  verdict.conclusion = all_ok ? UlrichVerdict::Conclusion::NoUlrichModules
                              : UlrichVerdict::Conclusion::Inconclusive;
  return verdict;
}

const char* to_string(SurjectivityStatus s) {
  switch (s) {
    case SurjectivityStatus::CertifiedForAllJ:
      return "certified-for-all-j";
    case SurjectivityStatus::VerifiedUpToBound:
      return "verified-up-to-bound";
    case SurjectivityStatus::Failed:
      return "failed";
  }
  return "?";
}

const char* to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Verified:
      return "verified";
    case HypothesisStatus::Assumed:
      return "assumed";
    case HypothesisStatus::Failed:
      return "failed";
    case HypothesisStatus::Unverified:
      return "unverified";
  }
  return "?";
}

const char* to_string(UlrichVerdict::Conclusion c) {
  return c == UlrichVerdict::Conclusion::NoUlrichModules ? "no-ulrich-modules" : "inconclusive";
}

}  // namespace ultk
