#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace ultk {

// Caps on a Buchberger run. Exceeding a cap raises BudgetExceeded; it never
// produces a wrong answer. Overridable through the environment:
// ULTK_GB_MAX_STEPS, ULTK_GB_MAX_BASIS.
struct GbBudget {
  std::uint64_t max_steps = 20'000'000;
  std::size_t max_basis = 20'000;

  static GbBudget from_env();
};

struct IdealPresentation {
  IdealPresentation(PolyContextPtr ctx, std::vector<Polynomial> gens);

  PolyContextPtr ctx;
  std::vector<Polynomial> generators;  // nonzero; zeros dropped on construction
};

class GroebnerBasis {
public:
  GroebnerBasis(PolyContextPtr ctx, std::vector<Polynomial> elements, IdealPresentation source)
      : ctx_(std::move(ctx)), elements_(std::move(elements)), source_(std::move(source)) {}

  const PolyContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return ctx_->order; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const IdealPresentation& source() const { return source_; }

  bool is_trivial_unit_ideal() const;
  std::vector<Monomial> leading_monomials() const;

private:
  PolyContextPtr ctx_;                 // carries the order the basis is reduced under
  std::vector<Polynomial> elements_;   // monic, reduced, sorted ascending by leading monomial
  IdealPresentation source_;
};

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// weighted degree first, ties by pair index), full reduction, final
// inter-reduction to the unique reduced basis. Deterministic.
GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order,
                         const GbBudget& budget = GbBudget::from_env());

// Cached variant: memoizes on (ambient, generators, order). Safe for
// concurrent lookup.
const GroebnerBasis& buchberger_cached(const IdealPresentation& ideal,
                                       const MonomialOrder& order,
                                       const GbBudget& budget = GbBudget::from_env());

// Remainder of the division algorithm: no term of the result is divisible by
// any leading monomial of the basis. Idempotent.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& p, const IdealPresentation& ideal,
                      const GbBudget& budget = GbBudget::from_env());

// Rabinowitsch trick: p lies in the radical iff 1 is in ideal + (1 - w p)
// for a fresh variable w.
bool radical_membership(const Polynomial& p, const IdealPresentation& ideal,
                        const GbBudget& budget = GbBudget::from_env());

// Intersection with the subring on the remaining variables, from a
// block-order basis. `drop` holds variable names.
IdealPresentation eliminate(const IdealPresentation& ideal, const std::set<std::string>& drop,
                            const GbBudget& budget = GbBudget::from_env());

// Kernel of the ring map k[source] -> k[target] sending source variable i to
// images[i], via the graph ideal and elimination.
IdealPresentation kernel_of_ring_map(const VariableTable& source, const VariableTable& target,
                                     const CoefficientField& field,
                                     const std::vector<Polynomial>& images,
                                     const GbBudget& budget = GbBudget::from_env());

bool ideal_contains(const IdealPresentation& super, const IdealPresentation& sub,
                    const GbBudget& budget = GbBudget::from_env());
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b,
                 const GbBudget& budget = GbBudget::from_env());

// Lifts a polynomial into a context whose table contains the source table's
// variables (matched by name).
Polynomial lift_polynomial(const Polynomial& p, const PolyContextPtr& target);

}  // namespace ultk
