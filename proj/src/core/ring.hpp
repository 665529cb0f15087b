#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "polynomial.hpp"

namespace ultk {

// Antichain of minimal generators of a monomial ideal.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> gens);

  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains_monomial(const Monomial& m) const;

private:
  std::vector<Monomial> gens_;
};

// Weighted-homogeneous presentation k[x_1..x_n]/(relations). The degree-0
// component is k because every variable weight is positive; homogeneity of
// each relation is enforced at construction so the quotient is graded.
class RingPresentation {
public:
  RingPresentation(VariableTable table, CoefficientField field,
                   std::vector<Polynomial> relations);

  const PolyContextPtr& context() const { return ctx_; }
  const VariableTable& table() const { return ctx_->table; }
  const CoefficientField& field() const { return ctx_->field; }
  const std::vector<Polynomial>& relations() const { return relations_; }

  IdealPresentation relation_ideal() const { return IdealPresentation(ctx_, relations_); }
  // Reduced basis of the relation ideal under the presentation's order;
  // memoized, safe for concurrent use.
  const GroebnerBasis& groebner(const GbBudget& budget = GbBudget::from_env()) const;
  MonomialIdeal initial_ideal(const GbBudget& budget = GbBudget::from_env()) const;

  // Standard monomials of weighted degree d: a k-basis of the degree-d
  // component of the quotient. Sorted descending under the ring's order.
  std::vector<Monomial> component_basis(std::uint64_t d,
                                        const GbBudget& budget = GbBudget::from_env()) const;
  std::size_t component_dimension(std::uint64_t d,
                                  const GbBudget& budget = GbBudget::from_env()) const {
    return component_basis(d, budget).size();
  }

  Polynomial parse(const std::string& text) const;

private:
  PolyContextPtr ctx_;
  std::vector<Polynomial> relations_;
};

// All monomials of weighted degree d over `table` avoiding `avoid`, sorted
// descending under `order`.
std::vector<Monomial> monomials_of_degree(const VariableTable& table, std::uint64_t d,
                                          const MonomialIdeal& avoid, const MonomialOrder& order);

}  // namespace ultk
