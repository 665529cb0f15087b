#include "groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

#include "errors.hpp"

namespace ultk {

GbBudget GbBudget::from_env() {
  GbBudget b;
  if (const char* s = std::getenv("ULTK_GB_MAX_STEPS")) {
    b.max_steps = std::strtoull(s, nullptr, 10);
  }
  if (const char* s = std::getenv("ULTK_GB_MAX_BASIS")) {
    b.max_basis = std::strtoull(s, nullptr, 10);
  }
  return b;
}

IdealPresentation::IdealPresentation(PolyContextPtr c, std::vector<Polynomial> gens)
    : ctx(std::move(c)) {
  for (auto& g : gens) {
    if (!g.context()->same_ambient(*ctx)) {
      throw AmbientMismatch("ideal generator lives in a different ambient");
    }
    if (!g.is_zero()) generators.push_back(g.with_context(ctx));
  }
}

bool GroebnerBasis::is_trivial_unit_ideal() const {
  return elements_.size() == 1 && elements_[0].leading_monomial().is_one();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> lms;
  lms.reserve(elements_.size());
  for (const auto& g : elements_) lms.push_back(g.leading_monomial());
  return lms;
}

namespace {

struct Work {
  std::uint64_t steps = 0;
  const GbBudget* budget;

  void tick(const char* where) {
    if (++steps > budget->max_steps) {
      throw BudgetExceeded(std::string("reduction step budget exceeded in ") + where +
                           " (ULTK_GB_MAX_STEPS=" + std::to_string(budget->max_steps) + ")");
    }
  }
};

// Full division-algorithm remainder; divisor choice is the first basis
// element (in stored order) whose leading monomial divides the current term.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis, Work& work) {
  const auto& ctx = *p.context();
  Polynomial rest = p;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    work.tick("normal form");
    const Term& lt = rest.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lt.mono)) {
        Coeff factor = ctx.field.div(lt.coeff, g.leading_term().coeff);
        rest = rest - g.term_multiple(lt.mono.divide(g.leading_monomial()), factor);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      rest = rest - Polynomial::from_monomial(p.context(), lt.mono, lt.coeff);
    }
  }
  return Polynomial(p.context(), std::move(remainder));
}

struct PairKey {
  std::uint64_t lcm_degree;
  std::size_t i, j;

  bool operator<(const PairKey& other) const {
    if (lcm_degree != other.lcm_degree) return lcm_degree < other.lcm_degree;
    if (i != other.i) return i < other.i;
    return j < other.j;
  }
};

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order,
                         const GbBudget& budget) {
  PolyContextPtr ctx = ideal.ctx->order == order
                           ? ideal.ctx
                           : make_context(ideal.ctx->table, ideal.ctx->field, order);
  const auto& table = ctx->table;
  Work work{0, &budget};

  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators) {
    basis.push_back(g.with_context(ctx).monic());
  }
  // Fixed starting arrangement so runs are reproducible: ascending leading
  // monomial, ties by term count.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    int c = order.compare(a.leading_monomial(), b.leading_monomial(), table);
    if (c != 0) return c < 0;
    return a.term_count() < b.term_count();
  });

  std::set<PairKey> queue;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Monomial lcm = basis[i].leading_monomial().lcm(basis[k].leading_monomial());
      queue.insert(PairKey{lcm.weighted_degree(table), i, k});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  while (!queue.empty()) {
    PairKey key = *queue.begin();
    queue.erase(queue.begin());
    const Polynomial& f = basis[key.i];
    const Polynomial& g = basis[key.j];
    const Monomial& lf = f.leading_monomial();
    const Monomial& lg = g.leading_monomial();
    if (lf.coprime(lg)) continue;  // product criterion
    Monomial lcm = lf.lcm(lg);
    Polynomial spoly = f.term_multiple(lcm.divide(lf), ctx->field.one()) -
                       g.term_multiple(lcm.divide(lg), ctx->field.one());
    Polynomial r = reduce_full(spoly, basis, work);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    if (basis.size() > budget.max_basis) {
      throw BudgetExceeded("basis size budget exceeded (ULTK_GB_MAX_BASIS=" +
                           std::to_string(budget.max_basis) + ")");
    }
    push_pairs(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another
  // survivor's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (li != lj || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce each survivor against the others; the reduced basis is
  // unique, so the outcome does not depend on the sweep order.
  std::vector<Polynomial> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (j != i) others.push_back(reduced[j]);
    }
    reduced[i] = reduce_full(reduced[i], others, work).monic();
  }
  std::erase_if(reduced, [](const Polynomial& p) { return p.is_zero(); });
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial(), table) < 0;
  });
  return GroebnerBasis(ctx, std::move(reduced), ideal);
}

namespace {

std::string cache_key(const IdealPresentation& ideal, const MonomialOrder& order) {
  std::string key = ideal.ctx->field.describe() + ";" + order.describe() + ";";
  for (std::size_t i = 0; i < ideal.ctx->table.size(); ++i) {
    key += ideal.ctx->table.name(i) + ":" + std::to_string(ideal.ctx->table.weight(i)) + ",";
  }
  key += ";";
  for (const auto& g : ideal.generators) key += g.to_string() + ";";
  return key;
}

std::mutex gb_cache_mutex;
std::map<std::string, std::shared_ptr<const GroebnerBasis>>& gb_cache() {
  static std::map<std::string, std::shared_ptr<const GroebnerBasis>> cache;
  return cache;
}

}  // namespace

const GroebnerBasis& buchberger_cached(const IdealPresentation& ideal,
                                       const MonomialOrder& order, const GbBudget& budget) {
  std::string key = cache_key(ideal, order);
  {
    std::lock_guard<std::mutex> lock(gb_cache_mutex);
    auto it = gb_cache().find(key);
    if (it != gb_cache().end()) return *it->second;
  }
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(ideal, order, budget));
  std::lock_guard<std::mutex> lock(gb_cache_mutex);
  auto [it, inserted] = gb_cache().emplace(std::move(key), std::move(gb));
  return *it->second;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!p.context()->same_ambient(*gb.context())) {
    throw AmbientMismatch("normal_form: polynomial and basis ambients differ");
  }
  GbBudget budget = GbBudget::from_env();
  Work work{0, &budget};
  return reduce_full(p.with_context(gb.context()), gb.elements(), work);
}

bool ideal_membership(const Polynomial& p, const IdealPresentation& ideal,
                      const GbBudget& budget) {
  if (p.is_zero()) return true;
  const GroebnerBasis& gb = buchberger_cached(ideal, ideal.ctx->order, budget);
  return normal_form(p, gb).is_zero();
}

Polynomial lift_polynomial(const Polynomial& p, const PolyContextPtr& target) {
  if (p.field() != target->field) {
    throw AmbientMismatch("lift: source and target fields differ");
  }
  const auto& from = p.table();
  const auto& to = target->table;
  std::vector<std::size_t> where(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto idx = to.index_of(from.name(i));
    if (!idx) {
      throw AmbientMismatch("lift: variable '" + from.name(i) + "' missing from target table");
    }
    where[i] = *idx;
  }
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(to.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) exps[where[i]] = t.mono.exponent(i);
    terms.push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

// Restriction of `p` onto a sub-table; requires every monomial to be
// supported on the kept variables.
static Polynomial project_polynomial(const Polynomial& p, const PolyContextPtr& target) {
  const auto& from = p.table();
  const auto& to = target->table;
  std::vector<std::optional<std::size_t>> where(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) where[i] = to.index_of(from.name(i));
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(to.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (t.mono.exponent(i) == 0) continue;
      if (!where[i]) {
        throw ArgError("projection: polynomial involves dropped variable '" + from.name(i) + "'");
      }
      exps[*where[i]] = t.mono.exponent(i);
    }
    terms.push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

bool radical_membership(const Polynomial& p, const IdealPresentation& ideal,
                        const GbBudget& budget) {
  if (p.is_zero()) return true;
  const auto& table = ideal.ctx->table;
  std::string fresh = table.fresh_name("w");
  VariableTable ext = table.extended(fresh, 1);
  PolyContextPtr ectx = make_context(ext, ideal.ctx->field);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(lift_polynomial(g, ectx));
  Polynomial w = Polynomial::variable(ectx, ext.size() - 1);
  Polynomial one = Polynomial::constant(ectx, ectx->field.one());
  gens.push_back(one - w * lift_polynomial(p, ectx));
  GroebnerBasis gb = buchberger(IdealPresentation(ectx, std::move(gens)), ectx->order, budget);
  return gb.is_trivial_unit_ideal();
}

IdealPresentation eliminate(const IdealPresentation& ideal, const std::set<std::string>& drop,
                            const GbBudget& budget) {
  const auto& table = ideal.ctx->table;
  for (const auto& name : drop) {
    if (!table.index_of(name)) {
      throw ArgError("eliminate: unknown variable '" + name + "'");
    }
  }
  if (drop.empty()) {
    const GroebnerBasis& gb = buchberger_cached(ideal, ideal.ctx->order, budget);
    return IdealPresentation(ideal.ctx, gb.elements());
  }
  std::vector<bool> mask(table.size(), false);
  for (std::size_t i = 0; i < table.size(); ++i) mask[i] = drop.count(table.name(i)) > 0;
  MonomialOrder block = MonomialOrder::block(mask, MonomialOrder::weighted_grevlex());
  GroebnerBasis gb = buchberger(ideal, block, budget);

  std::vector<std::string> kept_names;
  std::vector<std::uint32_t> kept_weights;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!mask[i]) {
      kept_names.push_back(table.name(i));
      kept_weights.push_back(table.weight(i));
    }
  }
  PolyContextPtr sub = make_context(VariableTable(kept_names, kept_weights), ideal.ctx->field);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    bool involves_dropped = false;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < table.size() && !involves_dropped; ++i) {
        if (mask[i] && t.mono.exponent(i) > 0) involves_dropped = true;
      }
      if (involves_dropped) break;
    }
    if (!involves_dropped) kept.push_back(project_polynomial(g, sub));
  }
  return IdealPresentation(sub, std::move(kept));
}

IdealPresentation kernel_of_ring_map(const VariableTable& source, const VariableTable& target,
                                     const CoefficientField& field,
                                     const std::vector<Polynomial>& images,
                                     const GbBudget& budget) {
  if (images.size() != source.size()) {
    throw ArgError("kernel: need one image per source variable");
  }
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (target.index_of(source.name(i))) {
      throw ArgError("kernel: source and target share variable '" + source.name(i) + "'");
    }
  }
  std::vector<std::string> names = source.names();
  std::vector<std::uint32_t> weights = source.weights();
  names.insert(names.end(), target.names().begin(), target.names().end());
  weights.insert(weights.end(), target.weights().begin(), target.weights().end());
  PolyContextPtr combined = make_context(VariableTable(names, weights), field);

  std::vector<Polynomial> graph;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (images[i].table() != target) {
      throw AmbientMismatch("kernel: image " + std::to_string(i) +
                            " is not over the target variables");
    }
    Polynomial xi = Polynomial::variable(combined, i);
    graph.push_back(xi - lift_polynomial(images[i], combined));
  }
  std::set<std::string> drop(target.names().begin(), target.names().end());
  IdealPresentation result =
      eliminate(IdealPresentation(combined, std::move(graph)), drop, budget);
  // Re-anchor onto the caller's source table (same names/weights by
  // construction).
  PolyContextPtr sctx = make_context(source, field);
  std::vector<Polynomial> gens;
  for (const auto& g : result.generators) gens.push_back(lift_polynomial(g, sctx));
  return IdealPresentation(sctx, std::move(gens));
}

bool ideal_contains(const IdealPresentation& super, const IdealPresentation& sub,
                    const GbBudget& budget) {
  if (!super.ctx->same_ambient(*sub.ctx)) {
    throw AmbientMismatch("ideal_contains: ambients differ");
  }
  const GroebnerBasis& gb = buchberger_cached(super, super.ctx->order, budget);
  for (const auto& g : sub.generators) {
    if (!normal_form(g.with_context(super.ctx), gb).is_zero()) return false;
  }
  return true;
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const GbBudget& budget) {
  return ideal_contains(a, b, budget) && ideal_contains(b, a, budget);
}

}  // namespace ultk
