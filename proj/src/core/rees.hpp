#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ring.hpp"

namespace ultk {

// Presentation of the Rees algebra R[I t] of an ideal I = (g_1..g_r) in a
// quotient ring R: base variables plus one fresh T_i per generator, with the
// defining ideal obtained by eliminating the Rees parameter from the graph
// ideal. T_i carries weight deg(g_i) + 1 (internal degree plus one Rees
// step), which keeps every relation weighted-homogeneous.
struct ReesPresentation {
  RingPresentation base;
  std::vector<Polynomial> ideal_gens;
  std::vector<std::uint64_t> gen_degrees;
  std::vector<std::string> t_names;  // reserved names T1..Tr
  RingPresentation result;
};

ReesPresentation rees_presentation(const RingPresentation& base,
                                   const std::vector<Polynomial>& ideal_gens,
                                   const GbBudget& budget = GbBudget::from_env());

// Checks the defining property: substituting T_i -> g_i * tau sends every
// relation of `rees.result` into the extended base-relation ideal.
bool rees_relations_vanish(const ReesPresentation& rees,
                           const GbBudget& budget = GbBudget::from_env());

// Associated graded ring gr_I(R) = Rees / I*Rees. When R/(ideal_gens) = k
// (the irrelevant maximal ideal case) the result is presented on the T
// variables alone, graded by filtration degree (every T weight 1); when the
// generators are exactly the ambient variables the T's are renamed back to
// the variable names. Otherwise the presentation keeps the base variables.
struct GradedConePresentation {
  RingPresentation result;
  bool maximal_ideal_case = false;
  bool renamed_to_base = false;
  std::vector<std::uint64_t> internal_degrees;  // weighted degrees of the generators
};

GradedConePresentation associated_graded(const RingPresentation& base,
                                         const std::vector<Polynomial>& ideal_gens,
                                         const GbBudget& budget = GbBudget::from_env());

}  // namespace ultk
