#include "monomial.hpp"

#include <algorithm>

namespace ultk {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t e) {
  std::vector<std::uint32_t> exps(nvars, 0);
  exps.at(i) = e;
  return Monomial(std::move(exps));
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::weighted_degree(const VariableTable& table) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    d += static_cast<std::uint64_t>(exps_[i]) * table.weight(i);
  }
  return d;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint32_t> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(exps));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::divide(const Monomial& other) const {
  std::vector<std::uint32_t> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] - other.exps_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::uint32_t> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(exps));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<std::uint32_t> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(exps));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::pow(std::uint32_t e) const {
  std::vector<std::uint32_t> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] * e;
  return Monomial(std::move(exps));
}

std::string Monomial::to_string(const VariableTable& table) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += table.name(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialOrder MonomialOrder::weighted_grevlex() {
  MonomialOrder o;
  o.kind_ = Kind::WeightedGrevlex;
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<bool> eliminated, MonomialOrder inner) {
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.eliminated_ = std::move(eliminated);
  o.inner_ = std::make_shared<const MonomialOrder>(std::move(inner));
  return o;
}

namespace {

// Weighted degree first, then the grevlex tie-break: a > b when the last
// nonzero entry of a - b is negative. `mask` restricts to a sub-vector;
// nullptr means all variables.
int grevlex_compare(const Monomial& a, const Monomial& b, const VariableTable& table,
                    const std::vector<bool>* mask) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask && !(*mask)[i]) continue;
    da += static_cast<std::uint64_t>(a.exponent(i)) * table.weight(i);
    db += static_cast<std::uint64_t>(b.exponent(i)) * table.weight(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t j = a.size(); j-- > 0;) {
    if (mask && !(*mask)[j]) continue;
    std::int64_t diff =
        static_cast<std::int64_t>(a.exponent(j)) - static_cast<std::int64_t>(b.exponent(j));
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b,
                           const VariableTable& table) const {
  if (kind_ == Kind::WeightedGrevlex) {
    return grevlex_compare(a, b, table, nullptr);
  }
  int head = grevlex_compare(a, b, table, &eliminated_);
  if (head != 0) return head;
  std::vector<bool> rest(eliminated_.size());
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = !eliminated_[i];
  if (inner_->kind() == Kind::WeightedGrevlex) {
    return grevlex_compare(a, b, table, &rest);
  }
  // Nested block orders restrict the inner comparison to the remaining
  // variables by zeroing the eliminated block.
  std::vector<std::uint32_t> ea(a.exponents()), eb(b.exponents());
  for (std::size_t i = 0; i < eliminated_.size(); ++i) {
    if (eliminated_[i]) ea[i] = eb[i] = 0;
  }
  return inner_->compare(Monomial(std::move(ea)), Monomial(std::move(eb)), table);
}

bool MonomialOrder::operator==(const MonomialOrder& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::WeightedGrevlex) return true;
  return eliminated_ == other.eliminated_ && *inner_ == *other.inner_;
}

std::string MonomialOrder::describe() const {
  if (kind_ == Kind::WeightedGrevlex) return "grevlex";
  std::string out = "block[";
  for (bool b : eliminated_) out += b ? '1' : '0';
  return out + "]>" + inner_->describe();
}

}  // namespace ultk
