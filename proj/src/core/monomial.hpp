#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vartable.hpp"

namespace ultk {

// Exponent vector over a fixed VariableTable. The weighted degree is always
// derived from the ambient table, never cached.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool is_one() const;
  std::uint64_t weighted_degree(const VariableTable& table) const;
  std::uint64_t total_degree() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Quotient; caller guarantees divisibility.
  Monomial divide(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial pow(std::uint32_t e) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }
  // Plain lexicographic tie-breaking helper for containers; not a monomial order.
  bool operator<(const Monomial& other) const { return exps_ < other.exps_; }

  std::string to_string(const VariableTable& table) const;

private:
  std::vector<std::uint32_t> exps_;
};

// Total multiplicative well-order on monomials. WeightedGrevlex compares the
// table's weighted degree first and breaks ties reverse-lexicographically
// (the later variable with the smaller exponent wins). A Block order ranks
// the eliminated sub-vector first, so anything involving an eliminated
// variable sorts above everything free of them.
class MonomialOrder {
public:
  enum class Kind { WeightedGrevlex, Block };

  static MonomialOrder weighted_grevlex();
  static MonomialOrder block(std::vector<bool> eliminated, MonomialOrder inner);

  Kind kind() const { return kind_; }
  const std::vector<bool>& eliminated() const { return eliminated_; }

  // Three-way comparison: negative if a < b, 0 if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b, const VariableTable& table) const;
  bool less(const Monomial& a, const Monomial& b, const VariableTable& table) const {
    return compare(a, b, table) < 0;
  }

  bool operator==(const MonomialOrder& other) const;
  std::string describe() const;

private:
  MonomialOrder() = default;

  Kind kind_ = Kind::WeightedGrevlex;
  std::vector<bool> eliminated_;            // Block only
  std::shared_ptr<const MonomialOrder> inner_;  // Block only
};

}  // namespace ultk
