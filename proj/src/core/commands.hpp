#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "presentation_io.hpp"
#include "report.hpp"

namespace ultk {

// Result tree of one toolkit command plus the pass/fail bit that drives the
// process exit code: `passed` is false exactly when a mathematical check
// came out negative (errors are exceptions instead).
struct CommandOutcome {
  Json result;
  bool passed = true;
};

CommandOutcome cmd_hilbert(const LoadedPresentation& p);
CommandOutcome cmd_dim(const LoadedPresentation& p);
CommandOutcome cmd_ci_check(const LoadedPresentation& p);
// Extra generators parsed over the ring; empty means "use the file's params".
CommandOutcome cmd_length(const LoadedPresentation& p, const std::vector<std::string>& gens);
CommandOutcome cmd_multiplicity(const LoadedPresentation& p,
                                const std::vector<std::string>& params);
CommandOutcome cmd_gap(const LoadedPresentation& p, std::uint64_t a);
// Single check when `j` is set; otherwise the full condition up to j_max
// with the file's module generators.
CommandOutcome cmd_surjectivity(const LoadedPresentation& p, std::uint64_t a,
                                std::optional<std::uint64_t> j,
                                std::optional<std::uint64_t> j_max);
CommandOutcome cmd_truncation(const LoadedPresentation& p, std::uint64_t a, std::uint64_t j_max);
CommandOutcome cmd_section_cert(const LoadedPresentation& p);
CommandOutcome cmd_newton(const std::string& poly_text, const std::string& var1,
                          const std::string& var2);
CommandOutcome cmd_kernel_verify(const LoadedMap& map);
CommandOutcome cmd_cyclotomic(const std::string& poly_text);
CommandOutcome cmd_verdict(const LoadedPresentation& p, std::uint64_t a, std::uint64_t j_max,
                           bool acknowledge);
CommandOutcome cmd_rees(const LoadedPresentation& p, const std::vector<std::string>& ideal_gens,
                        const std::vector<std::string>& expected_relations);
CommandOutcome cmd_gr(const LoadedPresentation& p, const std::vector<std::string>& ideal_gens,
                      const std::vector<std::string>& expected_relations,
                      const std::vector<std::string>& surjection_relations);

// Parses an integer polynomial in t (used by the cyclotomic command).
ZPoly parse_integer_poly(const std::string& text);

}  // namespace ultk
