#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ultk {

// Dense integer-coefficient polynomial in one variable t. Used for Hilbert
// numerators and cyclotomic analysis.
class ZPoly {
public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static ZPoly constant(const mpz_class& c);
  static ZPoly one() { return constant(1); }
  // t^e with the given coefficient.
  static ZPoly monomial(std::size_t e, const mpz_class& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is represented as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
  }
  const mpz_class& leading() const;

  ZPoly operator+(const ZPoly& other) const;
  ZPoly operator-(const ZPoly& other) const;
  ZPoly operator*(const ZPoly& other) const;
  ZPoly operator-() const;
  bool operator==(const ZPoly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const ZPoly& other) const { return !(*this == other); }

  ZPoly pow(std::uint32_t e) const;
  mpz_class eval(const mpz_class& x) const;

  // Quotient when `divisor` divides exactly over the integers; nullopt
  // otherwise. Requires divisor with leading coefficient ±1.
  std::optional<ZPoly> divide_exact(const ZPoly& divisor) const;
  // Division with remainder by a divisor with unit leading coefficient.
  std::pair<ZPoly, ZPoly> divmod_unit(const ZPoly& divisor) const;

  // Ascending-exponent rendering, e.g. "1 - 2*t + 4*t^2".
  std::string to_string() const;

private:
  void trim();

  std::vector<mpz_class> coeffs_;  // coeffs_[i] multiplies t^i; no trailing zeros
};

// 1 - t^w, the standard graded denominator factor.
ZPoly one_minus_t_pow(std::uint32_t w);

}  // namespace ultk
