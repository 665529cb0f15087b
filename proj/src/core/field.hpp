#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace ultk {

// Exact field element. Over the rationals this is a canonical mpq (reduced,
// positive denominator); over a prime field it is the residue in [0, p)
// stored in the numerator with denominator 1. All arithmetic goes through
// CoefficientField so the representation invariant cannot drift.
using Coeff = mpq_class;

class CoefficientField {
public:
  enum class Kind { Rationals, PrimeField };

  static CoefficientField rationals() { return CoefficientField(Kind::Rationals, 0); }
  static CoefficientField prime_field(const mpz_class& p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  const mpz_class& characteristic() const { return p_; }

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }
  Coeff from_integer(const mpz_class& n) const;
  // Value of the literal a/b; rejects b = 0 and, over F_p, b ≡ 0 (mod p).
  Coeff from_fraction(const mpz_class& a, const mpz_class& b) const;
  // Canonical representative of an arbitrary raw value: reduced fraction
  // over the rationals, residue in [0, p) over a prime field.
  Coeff canonical(const Coeff& a) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  bool is_zero(const Coeff& a) const { return sgn(a) == 0; }
  bool is_one(const Coeff& a) const { return a == 1; }

  std::string to_string(const Coeff& a) const;
  std::string describe() const;

  bool operator==(const CoefficientField& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }
  bool operator!=(const CoefficientField& other) const { return !(*this == other); }

private:
  CoefficientField(Kind kind, mpz_class p) : kind_(kind), p_(std::move(p)) {}
  Coeff reduce(const mpz_class& n) const;

  Kind kind_;
  mpz_class p_;
};

}  // namespace ultk
