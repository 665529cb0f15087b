#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/groebner.hpp"
#include "core/parse.hpp"
#include "core/polynomial.hpp"

namespace ultk::testing {

// Deterministic xorshift generator so property suites are reproducible.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::uint64_t state_;
};

inline PolyContextPtr q_context(std::vector<std::string> names,
                                std::vector<std::uint32_t> weights) {
  return make_context(VariableTable(std::move(names), std::move(weights)),
                      CoefficientField::rationals());
}

inline Polynomial P(const std::string& text, const PolyContextPtr& ctx) {
  return parse_polynomial(text, ctx);
}

// Random polynomial with at most `max_terms` terms, total degree at most
// `max_degree`, integer coefficients in [-4, 4].
inline Polynomial random_poly(Rng& rng, const PolyContextPtr& ctx, std::size_t max_terms = 5,
                              std::uint32_t max_degree = 4) {
  std::vector<Term> terms;
  std::size_t n = ctx->table.size();
  std::size_t count = rng.below(max_terms + 1);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<std::uint32_t> exps(n, 0);
    std::uint64_t degree = rng.below(max_degree + 1);
    for (std::uint64_t i = 0; i < degree; ++i) exps[rng.below(n)]++;
    long c = static_cast<long>(rng.in_range(-4, 4));
    if (c == 0) c = 1;
    terms.push_back(Term{Monomial(std::move(exps)), Coeff(c)});
  }
  return Polynomial(ctx, std::move(terms));
}

// Random weighted-homogeneous polynomial of the given degree (may be zero
// when no monomial of that degree exists).
inline Polynomial random_homogeneous(Rng& rng, const PolyContextPtr& ctx, std::uint64_t degree,
                                     std::size_t max_terms = 3);

// Test-local naive expander, independent of Polynomial's arithmetic: maps
// exponent vectors to rational coefficients, multiplies term by term.
using NaivePoly = std::map<std::vector<std::uint32_t>, mpq_class>;

inline NaivePoly naive_of(const Polynomial& p) {
  NaivePoly out;
  for (const auto& t : p.terms()) out[t.mono.exponents()] = t.coeff;
  return out;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<std::uint32_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

inline NaivePoly naive_add(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out = a;
  for (const auto& [e, c] : b) {
    out[e] += c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

inline bool same_polynomial(const Polynomial& p, const NaivePoly& q) {
  return naive_of(p) == q;
}

// All S-polynomials of the basis reduce to zero: the Buchberger criterion,
// asserted directly against normal_form.
inline bool buchberger_criterion_holds(const GroebnerBasis& gb) {
  const auto& elems = gb.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Monomial& li = elems[i].leading_monomial();
      const Monomial& lj = elems[j].leading_monomial();
      Monomial lcm = li.lcm(lj);
      Polynomial s =
          elems[i].term_multiple(lcm.divide(li), gb.context()->field.one()) -
          elems[j].term_multiple(lcm.divide(lj), gb.context()->field.one());
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

inline Polynomial random_homogeneous(Rng& rng, const PolyContextPtr& ctx, std::uint64_t degree,
                                     std::size_t max_terms) {
  // Enumerate the monomials of the target degree and pick a few.
  std::vector<Monomial> pool;
  std::vector<std::uint32_t> exps(ctx->table.size(), 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint64_t remaining) -> void {
    if (var + 1 == ctx->table.size()) {
      std::uint64_t w = ctx->table.weight(var);
      if (ctx->table.size() == 0) return;
      if (remaining % w == 0) {
        exps[var] = static_cast<std::uint32_t>(remaining / w);
        pool.push_back(Monomial(exps));
        exps[var] = 0;
      }
      return;
    }
    std::uint64_t w = ctx->table.weight(var);
    for (std::uint64_t e = 0; e * w <= remaining; ++e) {
      exps[var] = static_cast<std::uint32_t>(e);
      self(self, var + 1, remaining - e * w);
    }
    exps[var] = 0;
  };
  if (ctx->table.size() > 0) rec(rec, 0, degree);
  std::vector<Term> terms;
  std::size_t count = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < count && !pool.empty(); ++i) {
    long c = static_cast<long>(rng.in_range(-3, 3));
    if (c == 0) c = 1;
    terms.push_back(Term{pool[rng.below(pool.size())], Coeff(c)});
  }
  return Polynomial(ctx, std::move(terms));
}

}  // namespace ultk::testing
