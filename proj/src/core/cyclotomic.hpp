#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zpoly.hpp"

namespace ultk {

unsigned euler_phi(unsigned n);

// The n-th cyclotomic polynomial, memoized.
const ZPoly& cyclotomic_polynomial(unsigned n);

struct CyclotomicFactorization {
  bool is_product = false;
  int sign = 1;
  // (n, multiplicity) pairs, ascending n; meaningful when is_product.
  std::vector<std::pair<unsigned, unsigned>> factors;
  // First stage at which trial division got stuck; meaningful otherwise.
  std::optional<ZPoly> obstruction;
};

// Is p equal to +/- a product of cyclotomic polynomials? Greedy trial
// division by every Phi_n with phi(n) <= remaining degree; the candidate
// list is finite because phi(n) > sqrt(n/2) bounds n <= 2*deg^2.
CyclotomicFactorization cyclotomic_product_test(const ZPoly& p);

}  // namespace ultk
