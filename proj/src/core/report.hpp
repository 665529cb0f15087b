#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "checker.hpp"
#include "cyclotomic.hpp"
#include "graded.hpp"
#include "hilbert.hpp"
#include "polytope.hpp"
#include "rees.hpp"

namespace ultk {

using Json = nlohmann::ordered_json;

extern const char* const kToolVersion;

// FNV-1a 64-bit content digest, hex encoded.
std::string content_digest(const std::string& data);

Json json_of_hilbert(const HilbertSeries& hs);
Json json_of_ci(const CompleteIntersectionWitness& w);
Json json_of_gap(const GapReport& g);
Json json_of_surjectivity(const SurjectivityResult& r, std::uint64_t a, std::uint64_t j,
                          const VariableTable& table);
Json json_of_condition(const ConditionReport& c, const VariableTable& table);
Json json_of_truncation(const TruncationResult& t, const VariableTable& table);
Json json_of_section(const SectionCertReport& s);
Json json_of_verdict(const UlrichVerdict& v, const VariableTable& table);
Json json_of_cyclotomic(const CyclotomicFactorization& f);
Json json_of_polygon(const LatticePolygon& p);
Json json_of_indecomposability(const IndecomposabilityVerdict& v);
Json json_of_irreducibility(const IrreducibilityVerdict& v);

// Standard report envelope: command echo, inputs digest, result tree,
// pass/fail bit, timing, tool version.
Json make_report(const std::string& command, Json inputs, Json result, bool passed,
                 std::int64_t timing_ms);

// Human-readable rendering with the same fields as the JSON tree.
std::string render_text(const Json& report);

}  // namespace ultk
