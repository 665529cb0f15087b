#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graded.hpp"
#include "hilbert.hpp"
#include "ring.hpp"

namespace ultk {

// Certificate that the ring is the section ring of an ample line bundle on
// Proj: homogeneous parameters whose radical is the irrelevant ideal, plus a
// degree-1 unit a/x^m with inverse b/x^n in each localization S_x.
struct UnitCertificate {
  Polynomial numerator;           // a
  unsigned denominator_power;     // m
  Polynomial inverse_numerator;   // b
  unsigned inverse_power;         // n
};

struct SectionRingCertificate {
  std::vector<Polynomial> params;
  std::vector<UnitCertificate> units;  // one per parameter, same order
};

struct SectionCertReport {
  bool ok = false;
  // Per ambient variable: does it lie in the radical of (params) + relations?
  std::vector<std::pair<std::string, bool>> radical_checks;
  struct UnitCheck {
    std::size_t param_index = 0;
    bool degree_ok = false;      // deg(a) - m*deg(x) == 1
    bool product_ok = false;     // a*b - x^(m+n) lies in the relation ideal
    std::int64_t unit_degree = 0;
  };
  std::vector<UnitCheck> unit_checks;
  std::string failure;  // first reason, empty when ok
};

SectionCertReport verify_section_ring_certificate(const RingPresentation& ring,
                                                  const SectionRingCertificate& cert,
                                                  const GbBudget& budget = GbBudget::from_env());

struct GapReport {
  bool ok = false;
  std::uint64_t a = 0;
  bool degree_zero_is_k = false;
  // (degree, component dimension) for 0 <= degree <= a-1.
  std::vector<std::pair<std::uint64_t, std::size_t>> dims;
};

// Condition: S_0 = k and S_j = 0 for 1 <= j <= a-1.
GapReport check_gap_condition(const RingPresentation& ring, std::uint64_t a,
                              const GbBudget& budget = GbBudget::from_env());

enum class SurjectivityStatus { CertifiedForAllJ, VerifiedUpToBound, Failed };

struct ConditionReport {
  GapReport gap;
  std::uint64_t a = 0;
  std::uint64_t j_max = 0;
  std::vector<std::pair<std::uint64_t, bool>> surjectivity;  // (j, surjective)
  std::optional<std::uint64_t> first_failed_j;
  std::optional<Monomial> first_missing;
  SurjectivityStatus status = SurjectivityStatus::Failed;
  // Stability leg: S generated over k[S_a] by the supplied module generators.
  bool module_check_ran = false;
  bool module_check_ok = false;
  std::uint64_t module_checked_up_to = 0;
  std::vector<std::uint64_t> generator_degrees;
};

// Direct surjectivity checks for a <= j <= j_max plus, when module
// generators are supplied, the finite generation certificate that upgrades
// the bounded result to "certified for all j >= a": S must be spanned
// degreewise by k[S_a]-multiples of the generators up to j_max + 2a, with
// every generator degree <= j_max.
ConditionReport check_surjectivity_condition(const RingPresentation& ring, std::uint64_t a,
                                             std::uint64_t j_max,
                                             const std::vector<Polynomial>& module_gens,
                                             const GbBudget& budget = GbBudget::from_env());

enum class HypothesisStatus { Verified, Assumed, Failed, Unverified };

struct HypothesisEntry {
  std::string tag;
  HypothesisStatus status = HypothesisStatus::Unverified;
  std::string detail;
};

struct VerdictConfig {
  // 0 = auto: the smallest nonzero component degree, at least 2.
  std::uint64_t a = 0;
  // 0 = default: 4a + the largest relation degree.
  std::uint64_t j_max = 0;
  bool acknowledge_assumptions = false;
  std::vector<Polynomial> module_gens;
  std::optional<SectionRingCertificate> section_cert;
};

struct UlrichVerdict {
  enum class Conclusion { NoUlrichModules, Inconclusive };

  Conclusion conclusion = Conclusion::Inconclusive;
  std::vector<HypothesisEntry> hypotheses;
  std::vector<std::string> verified;  // tags
  std::vector<std::string> assumed;   // tags; nonempty only under acknowledge
  std::vector<std::string> caveats;

  unsigned dimension = 0;
  std::uint64_t a = 0;
  std::uint64_t j_max = 0;
  GapReport gap;
  ConditionReport surjectivity;
  CompleteIntersectionWitness ci;
  std::optional<SectionCertReport> section;
};

// Assembles the non-existence verdict. NoUlrichModules requires: dim >= 2,
// the gap condition at a, the surjectivity condition certified for all
// j >= a (or bounded + acknowledged), a verified section-ring certificate,
// and depth >= 2 through the complete-intersection route (or acknowledged).
UlrichVerdict ulrich_verdict(const RingPresentation& ring, const VerdictConfig& config,
                             const GbBudget& budget = GbBudget::from_env());

const char* to_string(SurjectivityStatus s);
const char* to_string(HypothesisStatus s);
const char* to_string(UlrichVerdict::Conclusion c);

}  // namespace ultk
