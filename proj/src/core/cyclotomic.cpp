#include "cyclotomic.hpp"

#include <map>
#include <mutex>

#include "errors.hpp"

namespace ultk {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const ZPoly& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, ZPoly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0) throw ArgError("cyclotomic polynomial index must be positive");

  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, filled bottom-up over the
  // divisors of n so the recursion never re-enters the lock.
  for (unsigned m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    ZPoly numerator = ZPoly::monomial(m, 1) - ZPoly::one();
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      auto q = numerator.divide_exact(cache.at(d));
      if (!q) throw Error("internal: cyclotomic recursion division failed");
      numerator = std::move(*q);
    }
    cache.emplace(m, std::move(numerator));
  }
  return cache.at(n);
}

CyclotomicFactorization cyclotomic_product_test(const ZPoly& p) {
  if (p.is_zero()) throw ArgError("cyclotomic test: zero polynomial");
  CyclotomicFactorization out;
  ZPoly work = p;
  if (work.leading() < 0) {
    out.sign = -1;
    work = -work;
  }
  if (work.leading() != 1) {
    out.is_product = false;
    out.obstruction = work;
    return out;
  }
  std::map<unsigned, unsigned> factors;
  while (work.degree() > 0) {
    long deg = work.degree();
    unsigned limit = static_cast<unsigned>(2 * deg * deg);
    bool divided = false;
    for (unsigned n = 1; n <= limit; ++n) {
      if (euler_phi(n) > static_cast<unsigned>(deg)) continue;
      auto q = work.divide_exact(cyclotomic_polynomial(n));
      if (q) {
        factors[n]++;
        work = std::move(*q);
        divided = true;
        break;
      }
    }
    if (!divided) {
      out.is_product = false;
      out.obstruction = work;
      return out;
    }
  }
  // Monic with every cyclotomic factor peeled off: the residue is 1.
  if (work != ZPoly::one()) {
    out.is_product = false;
    out.obstruction = work;
    return out;
  }
  out.is_product = true;
  out.factors.assign(factors.begin(), factors.end());
  return out;
}

}  // namespace ultk
