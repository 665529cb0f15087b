#include "ring.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "parse.hpp"

namespace ultk {

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
    }
    if (!redundant) gens_.push_back(gens[i]);
  }
  std::sort(gens_.begin(), gens_.end(),
            [](const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); });
}

bool MonomialIdeal::contains_monomial(const Monomial& m) const {
  for (const auto& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

RingPresentation::RingPresentation(VariableTable table, CoefficientField field,
                                   std::vector<Polynomial> relations)
    : ctx_(make_context(std::move(table), std::move(field))) {
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    Polynomial rel = r.with_context(ctx_);
    std::uint64_t deg = 0;
    if (rel.is_homogeneous(&deg) && deg == 0) {
      throw ArgError("relation '" + rel.to_string() +
                     "' is a nonzero constant; the quotient would not have S_0 = k");
    }
    if (!rel.is_homogeneous(&deg)) {
      std::set<std::uint64_t> degs;
      for (const auto& t : rel.terms()) degs.insert(t.mono.weighted_degree(ctx_->table));
      std::string list;
      for (auto d : degs) list += (list.empty() ? "" : ", ") + std::to_string(d);
      throw ArgError("relation '" + rel.to_string() +
                     "' is not weighted-homogeneous (term degrees " + list + ")");
    }
    relations_.push_back(std::move(rel));
  }
}

const GroebnerBasis& RingPresentation::groebner(const GbBudget& budget) const {
  return buchberger_cached(relation_ideal(), ctx_->order, budget);
}

MonomialIdeal RingPresentation::initial_ideal(const GbBudget& budget) const {
  return MonomialIdeal(groebner(budget).leading_monomials());
}

std::vector<Monomial> monomials_of_degree(const VariableTable& table, std::uint64_t d,
                                          const MonomialIdeal& avoid,
                                          const MonomialOrder& order) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(table.size(), 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint64_t remaining) -> void {
    if (var + 1 == table.size()) {
      std::uint64_t w = table.weight(var);
      if (remaining % w != 0) return;
      std::uint64_t e = remaining / w;
      if (e > 0xffffffffull) return;
      exps[var] = static_cast<std::uint32_t>(e);
      Monomial m(exps);
      if (!avoid.contains_monomial(m)) out.push_back(std::move(m));
      exps[var] = 0;
      return;
    }
    std::uint64_t w = table.weight(var);
    for (std::uint64_t e = 0; e * w <= remaining; ++e) {
      exps[var] = static_cast<std::uint32_t>(e);
      self(self, var + 1, remaining - e * w);
    }
    exps[var] = 0;
  };
  if (table.size() == 0) {
    if (d == 0) out.push_back(Monomial::one(0));
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return order.compare(a, b, table) > 0;
  });
  return out;
}

std::vector<Monomial> RingPresentation::component_basis(std::uint64_t d,
                                                        const GbBudget& budget) const {
  return monomials_of_degree(ctx_->table, d, initial_ideal(budget), ctx_->order);
}

Polynomial RingPresentation::parse(const std::string& text) const {
  return parse_polynomial(text, ctx_);
}

}  // namespace ultk
