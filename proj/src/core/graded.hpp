#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hilbert.hpp"
#include "ring.hpp"

namespace ultk {

// Row-echelon accumulator over the coefficient field; rows are coordinate
// vectors in a fixed standard-monomial basis.
class RowSpace {
public:
  RowSpace(CoefficientField field, std::size_t width)
      : field_(std::move(field)), width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rank() == width_; }

  // Reduces `row` against the space; if independent, absorbs it and returns
  // true.
  bool insert(std::vector<Coeff> row);
  bool contains(std::vector<Coeff> row) const;
  std::optional<std::size_t> first_pivotless_column() const;
  const std::vector<std::vector<Coeff>>& rows() const { return rows_; }

private:
  void reduce(std::vector<Coeff>& row) const;

  CoefficientField field_;
  std::size_t width_;
  std::vector<std::vector<Coeff>> rows_;    // pivot-normalized, sorted by pivot
  std::vector<std::size_t> pivots_;
};

struct QuotientLengthResult {
  bool finite = false;
  std::uint64_t length = 0;  // meaningful only when finite
};

// Length of ring/(extra) as a k-vector space: finite iff the combined
// initial ideal contains a pure power of every variable.
QuotientLengthResult quotient_length(const RingPresentation& ring,
                                     const std::vector<Polynomial>& extra,
                                     const GbBudget& budget = GbBudget::from_env());

// Reduction-length multiplicity: params must be a homogeneous system of
// parameters (count = dim, finite colength). The caller owns the hypothesis
// that params generate a reduction of the maximal ideal; see the checker's
// caveat ledger.
std::uint64_t multiplicity_via_reduction(const RingPresentation& ring,
                                         const std::vector<Polynomial>& params,
                                         const GbBudget& budget = GbBudget::from_env());

struct SurjectivityResult {
  bool surjective = false;
  std::size_t dim_a = 0, dim_j = 0, dim_target = 0, rank = 0;
  std::optional<Monomial> missing;  // a basis class outside the image
};

// Is the multiplication map S_a (x) S_j -> S_{a+j} surjective? Exact rank
// computation of all pairwise products in the standard-monomial basis.
SurjectivityResult multiplication_surjective(const RingPresentation& ring, std::uint64_t a,
                                             std::uint64_t j,
                                             const GbBudget& budget = GbBudget::from_env());

struct TruncationFailure {
  unsigned power = 0;
  std::uint64_t degree = 0;
  std::optional<Monomial> missing;
};

struct TruncationResult {
  bool ok = false;
  unsigned a = 0;
  unsigned j_max = 0;
  std::uint64_t max_degree_checked = 0;
  std::vector<TruncationFailure> failures;
};

// Degreewise check that m^j exhausts S_d for ja <= d <= ja + 2a, where
// m = S_{>=1} and m^j is spanned by j-fold products of positive-degree
// standard monomials.
TruncationResult truncation_power_check(const RingPresentation& ring, unsigned a, unsigned j_max,
                                        const GbBudget& budget = GbBudget::from_env());

struct ModuleSpanResult {
  bool ok = false;
  std::uint64_t checked_up_to = 0;
  std::optional<std::uint64_t> first_failure_degree;
};

// Degreewise test that S_d = sum_g (k[S_a])_{d - deg g} * g for d <= bound:
// the module-generation leg of the stability certificate.
ModuleSpanResult module_generation_check(const RingPresentation& ring, std::uint64_t a,
                                         const std::vector<Polynomial>& gens,
                                         std::uint64_t bound,
                                         const GbBudget& budget = GbBudget::from_env());

}  // namespace ultk
