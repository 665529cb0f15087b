#include "field.hpp"

namespace ultk {

CoefficientField CoefficientField::prime_field(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw ArgError("prime field modulus " + p.get_str() + " is not prime");
  }
  return CoefficientField(Kind::PrimeField, p);
}

Coeff CoefficientField::reduce(const mpz_class& n) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t());
  return Coeff(r);
}

Coeff CoefficientField::from_integer(const mpz_class& n) const {
  if (is_rationals()) return Coeff(n);
  return reduce(n);
}

Coeff CoefficientField::from_fraction(const mpz_class& a, const mpz_class& b) const {
  if (b == 0) throw ArgError("zero denominator in coefficient literal");
  if (is_rationals()) {
    Coeff q(a, b);
    q.canonicalize();
    return q;
  }
  return mul(reduce(a), inv(reduce(b)));
}

Coeff CoefficientField::canonical(const Coeff& a) const {
  if (is_rationals()) {
    Coeff r = a;
    r.canonicalize();
    return r;
  }
  if (a.get_den() == 1) return reduce(a.get_num());
  return mul(reduce(a.get_num()), inv(reduce(a.get_den())));
}

Coeff CoefficientField::add(const Coeff& a, const Coeff& b) const {
  if (is_rationals()) return a + b;
  return reduce(a.get_num() + b.get_num());
}

Coeff CoefficientField::sub(const Coeff& a, const Coeff& b) const {
  if (is_rationals()) return a - b;
  return reduce(a.get_num() - b.get_num());
}

Coeff CoefficientField::mul(const Coeff& a, const Coeff& b) const {
  if (is_rationals()) return a * b;
  return reduce(a.get_num() * b.get_num());
}

Coeff CoefficientField::neg(const Coeff& a) const {
  if (is_rationals()) return -a;
  return reduce(-a.get_num());
}

Coeff CoefficientField::inv(const Coeff& a) const {
  if (is_zero(a)) throw ArgError("division by zero field element");
  if (is_rationals()) return 1 / a;
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p_.get_mpz_t()) == 0) {
    throw ArgError("element not invertible modulo " + p_.get_str());
  }
  return Coeff(r);
}

std::string CoefficientField::to_string(const Coeff& a) const {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string CoefficientField::describe() const {
  return is_rationals() ? "rationals" : "fp " + p_.get_str();
}

}  // namespace ultk
