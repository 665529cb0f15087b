#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"
#include "vartable.hpp"

namespace ultk {

// Shared, immutable ambient for polynomials: variables, coefficient field and
// the monomial order terms are kept sorted under. Two contexts with the same
// table and field are the same ambient even if their orders differ.
struct PolyContext {
  VariableTable table;
  CoefficientField field;
  MonomialOrder order;

  bool same_ambient(const PolyContext& other) const {
    return table == other.table && field == other.field;
  }
};

using PolyContextPtr = std::shared_ptr<const PolyContext>;

PolyContextPtr make_context(VariableTable table, CoefficientField field,
                            MonomialOrder order = MonomialOrder::weighted_grevlex());

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse exact polynomial: nonzero terms, strictly descending in the
// context's monomial order. Immutable value type; all operations are pure.
class Polynomial {
public:
  explicit Polynomial(PolyContextPtr ctx) : ctx_(std::move(ctx)) {}
  // Normalizes: merges duplicate monomials, drops zeros, sorts descending.
  Polynomial(PolyContextPtr ctx, std::vector<Term> terms);

  static Polynomial zero(PolyContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(PolyContextPtr ctx, const Coeff& c);
  static Polynomial variable(PolyContextPtr ctx, std::size_t index);
  static Polynomial from_monomial(PolyContextPtr ctx, Monomial m, Coeff c = Coeff(1));

  const PolyContextPtr& context() const { return ctx_; }
  const VariableTable& table() const { return ctx_->table; }
  const CoefficientField& field() const { return ctx_->field; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial scaled(const Coeff& c) const;
  Polynomial term_multiple(const Monomial& m, const Coeff& c) const;
  Polynomial monic() const;
  Polynomial pow(std::uint32_t e) const;

  // Maximum weighted degree over terms; nullopt for the zero polynomial.
  std::optional<std::uint64_t> weighted_degree() const;
  bool is_homogeneous(std::uint64_t* degree_out = nullptr) const;
  std::map<std::uint64_t, Polynomial> homogeneous_components() const;

  // Ring-homomorphism image under variable -> polynomial over a target
  // context. Variables absent from the assignment map identically when the
  // target table contains a variable of the same name; otherwise this is an
  // error.
  Polynomial substitute(const std::map<std::string, Polynomial>& assignment,
                        const PolyContextPtr& target) const;

  // Same polynomial re-sorted under a different order (same ambient).
  Polynomial with_order(const MonomialOrder& order) const;
  Polynomial with_context(const PolyContextPtr& ctx) const;

  std::string to_string() const;

private:
  void normalize();

  PolyContextPtr ctx_;
  std::vector<Term> terms_;
};

// Throws AmbientMismatch unless both operands share an ambient.
void require_same_ambient(const Polynomial& a, const Polynomial& b, const char* op);

}  // namespace ultk
