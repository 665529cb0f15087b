#include "zpoly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace ultk {

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly ZPoly::constant(const mpz_class& c) {
  return ZPoly(std::vector<mpz_class>{c});
}

ZPoly ZPoly::monomial(std::size_t e, const mpz_class& c) {
  std::vector<mpz_class> coeffs(e + 1, mpz_class(0));
  coeffs[e] = c;
  return ZPoly(std::move(coeffs));
}

const mpz_class& ZPoly::leading() const {
  if (coeffs_.empty()) throw ArgError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

ZPoly ZPoly::operator+(const ZPoly& other) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), other.coeffs_.size()), mpz_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return ZPoly(std::move(out));
}

ZPoly ZPoly::operator-(const ZPoly& other) const { return *this + (-other); }

ZPoly ZPoly::operator-() const {
  std::vector<mpz_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return ZPoly(std::move(out));
}

ZPoly ZPoly::operator*(const ZPoly& other) const {
  if (is_zero() || other.is_zero()) return ZPoly();
  std::vector<mpz_class> out(coeffs_.size() + other.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return ZPoly(std::move(out));
}

ZPoly ZPoly::pow(std::uint32_t e) const {
  ZPoly result = ZPoly::one();
  ZPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
    e >>= 1u;
  }
  return result;
}

mpz_class ZPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

std::pair<ZPoly, ZPoly> ZPoly::divmod_unit(const ZPoly& divisor) const {
  if (divisor.is_zero()) throw ArgError("division by the zero polynomial");
  const mpz_class& lead = divisor.leading();
  if (lead != 1 && lead != -1) {
    throw ArgError("divmod requires a divisor with unit leading coefficient");
  }
  std::vector<mpz_class> rem = coeffs_;
  long dd = divisor.degree();
  if (degree() < dd) return {ZPoly(), *this};
  std::vector<mpz_class> quot(coeffs_.size() - dd, mpz_class(0));
  for (long i = degree(); i >= dd; --i) {
    mpz_class c = rem[i];
    if (c == 0) continue;
    mpz_class q = lead == 1 ? c : mpz_class(-c);
    quot[i - dd] = q;
    for (long j = 0; j <= dd; ++j) {
      rem[i - dd + j] -= q * divisor.coeffs_[j];
    }
  }
  return {ZPoly(std::move(quot)), ZPoly(std::move(rem))};
}

std::optional<ZPoly> ZPoly::divide_exact(const ZPoly& divisor) const {
  auto [q, r] = divmod_unit(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::string ZPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    mpz_class c = coeffs_[i];
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    if (i == 0) {
      out += c.get_str();
    } else {
      std::string tpart = i == 1 ? "t" : "t^" + std::to_string(i);
      out += (c == 1) ? tpart : c.get_str() + "*" + tpart;
    }
  }
  return out.empty() ? "0" : out;
}

ZPoly one_minus_t_pow(std::uint32_t w) {
  std::vector<mpz_class> coeffs(w + 1, mpz_class(0));
  coeffs[0] = 1;
  coeffs[w] = -1;
  return ZPoly(std::move(coeffs));
}

}  // namespace ultk
