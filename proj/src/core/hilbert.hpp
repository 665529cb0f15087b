#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ring.hpp"
#include "zpoly.hpp"

namespace ultk {

// Exact rational form numerator / prod_w (1 - t^w), one denominator factor
// per ambient variable. The series expansion matches dim_k S_d degreewise.
struct HilbertSeries {
  ZPoly numerator;
  std::vector<std::uint32_t> denominator_weights;  // sorted ascending

  // Power-series coefficients up to and including t^bound.
  std::vector<mpz_class> expand(std::size_t bound) const;
  std::string to_string() const;

  bool operator==(const HilbertSeries& other) const {
    return numerator == other.numerator && denominator_weights == other.denominator_weights;
  }
};

// K-polynomial of a monomial ideal: numerator of the Hilbert series of
// S/ideal over prod (1 - t^{w_i}); divide-and-conquer on a pivot variable
// power, with the pairwise-coprime Koszul base case.
ZPoly hilbert_numerator(const MonomialIdeal& ideal, const VariableTable& table);

HilbertSeries hilbert_series(const RingPresentation& ring,
                             const GbBudget& budget = GbBudget::from_env());

// Krull dimension of the quotient: the largest coordinate subspace avoiding
// the initial ideal's generator supports.
unsigned krull_dim(const RingPresentation& ring, const GbBudget& budget = GbBudget::from_env());
unsigned monomial_ideal_dimension(const MonomialIdeal& ideal, std::size_t nvars);

struct CompleteIntersectionWitness {
  bool is_ci = false;
  std::size_t variable_count = 0;
  std::size_t relation_count = 0;
  unsigned dimension = 0;
  std::vector<std::uint64_t> relation_degrees;
  // When is_ci holds, the Hilbert numerator equals the Koszul product
  // prod (1 - t^{deg r}); recorded here as the witness identity.
  bool hilbert_identity = false;
  ZPoly koszul_numerator;
};

// Complete intersection test: codimension equals the number of relations.
CompleteIntersectionWitness is_complete_intersection(const RingPresentation& ring,
                                                     const GbBudget& budget = GbBudget::from_env());

}  // namespace ultk
