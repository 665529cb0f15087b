#pragma once

#include <string>
#include <vector>

#include "checker.hpp"
#include "ring.hpp"

namespace ultk {

// A ring presentation file: the ring itself plus optional named certificate
// material (section-ring parameters with unit certificates, module
// generators). Grammar in docs/presentation-format.md; a JSON mirror with
// the same fields is accepted.
struct LoadedPresentation {
  RingPresentation ring;
  std::vector<Polynomial> params;
  std::vector<UnitCertificate> units;
  std::vector<Polynomial> module_gens;

  bool has_section_certificate() const { return !params.empty(); }
  SectionRingCertificate section_certificate() const { return {params, units}; }
};

LoadedPresentation parse_presentation(const std::string& text);
LoadedPresentation load_presentation(const std::string& path);

// Canonical text form; loading it back reproduces the same canonical form.
std::string serialize_presentation(const LoadedPresentation& p);

// Kernel-verification input: a ring map between polynomial rings plus the
// expected kernel generators.
struct LoadedMap {
  VariableTable source;
  VariableTable target;
  CoefficientField field;
  std::vector<Polynomial> images;    // over the target, one per source variable
  std::vector<Polynomial> expected;  // over the source
};

LoadedMap parse_map(const std::string& text);
LoadedMap load_map(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace ultk
