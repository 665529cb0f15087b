#include "rees.hpp"

#include <set>

#include "errors.hpp"
#include "graded.hpp"

namespace ultk {

namespace {

struct ReesScaffold {
  PolyContextPtr combined;  // base vars + tau + T1..Tr
  std::string tau;
  std::vector<std::string> t_names;
  std::vector<std::uint64_t> degrees;
};

ReesScaffold build_scaffold(const RingPresentation& base,
                            const std::vector<Polynomial>& gens) {
  ReesScaffold s;
  s.degrees.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) throw ArgError("rees: ideal generators must be nonzero");
    std::uint64_t d = 0;
    if (!g.with_context(base.context()).is_homogeneous(&d)) {
      throw ArgError("rees: generator '" + g.to_string() + "' is not weighted-homogeneous");
    }
    s.degrees.push_back(d);
  }
  VariableTable table = base.table();
  s.tau = table.fresh_name("tau");
  table = table.extended(s.tau, 1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string tn = "T" + std::to_string(i + 1);
    if (base.table().index_of(tn)) {
      throw ArgError("rees: variable name '" + tn + "' is reserved for Rees generators");
    }
    s.t_names.push_back(tn);
    table = table.extended(tn, static_cast<std::uint32_t>(s.degrees[i] + 1));
  }
  s.combined = make_context(table, base.field());
  return s;
}

std::vector<Polynomial> graph_ideal(const RingPresentation& base,
                                    const std::vector<Polynomial>& gens,
                                    const ReesScaffold& s) {
  std::vector<Polynomial> out;
  for (const auto& r : base.relations()) out.push_back(lift_polynomial(r, s.combined));
  std::size_t tau_idx = *s.combined->table.index_of(s.tau);
  Polynomial tau = Polynomial::variable(s.combined, tau_idx);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t ti = *s.combined->table.index_of(s.t_names[i]);
    out.push_back(Polynomial::variable(s.combined, ti) -
                  lift_polynomial(gens[i].with_context(base.context()), s.combined) * tau);
  }
  return out;
}

}  // namespace

ReesPresentation rees_presentation(const RingPresentation& base,
                                   const std::vector<Polynomial>& ideal_gens,
                                   const GbBudget& budget) {
  ReesScaffold s = build_scaffold(base, ideal_gens);
  IdealPresentation graph(s.combined, graph_ideal(base, ideal_gens, s));
  IdealPresentation defining = eliminate(graph, {s.tau}, budget);

  // Re-present over base vars + T's with the Rees weights.
  VariableTable table = base.table();
  for (std::size_t i = 0; i < s.t_names.size(); ++i) {
    table = table.extended(s.t_names[i], static_cast<std::uint32_t>(s.degrees[i] + 1));
  }
  std::vector<Polynomial> rels;
  PolyContextPtr rctx = make_context(table, base.field());
  for (const auto& g : defining.generators) rels.push_back(lift_polynomial(g, rctx));

  ReesPresentation out{base, {}, s.degrees, s.t_names,
                       RingPresentation(table, base.field(), std::move(rels))};
  for (const auto& g : ideal_gens) out.ideal_gens.push_back(g.with_context(base.context()));
  return out;
}

bool rees_relations_vanish(const ReesPresentation& rees, const GbBudget& budget) {
  const RingPresentation& base = rees.base;
  VariableTable table = base.table();
  std::string tau_name = table.fresh_name("tau");
  table = table.extended(tau_name, 1);
  PolyContextPtr ectx = make_context(table, base.field());
  Polynomial tau = Polynomial::variable(ectx, table.size() - 1);

  std::map<std::string, Polynomial> assignment;
  for (std::size_t i = 0; i < rees.t_names.size(); ++i) {
    assignment.emplace(rees.t_names[i],
                       lift_polynomial(rees.ideal_gens[i], ectx) * tau);
  }
  std::vector<Polynomial> base_rels;
  for (const auto& r : base.relations()) base_rels.push_back(lift_polynomial(r, ectx));
  IdealPresentation base_ideal(ectx, std::move(base_rels));
  const GroebnerBasis& gb = buchberger_cached(base_ideal, ectx->order, budget);
  for (const auto& rel : rees.result.relations()) {
    Polynomial image = rel.substitute(assignment, ectx);
    if (!normal_form(image, gb).is_zero()) return false;
  }
  return true;
}

GradedConePresentation associated_graded(const RingPresentation& base,
                                         const std::vector<Polynomial>& ideal_gens,
                                         const GbBudget& budget) {
  ReesPresentation rees = rees_presentation(base, ideal_gens, budget);

  QuotientLengthResult residue = quotient_length(base, rees.ideal_gens, budget);
  bool maximal = residue.finite && residue.length == 1;

  // gr = Rees / I*Rees: append the generators to the Rees relations.
  const PolyContextPtr& rctx = rees.result.context();
  std::vector<Polynomial> gr_rels = rees.result.relations();
  for (const auto& g : rees.ideal_gens) gr_rels.push_back(lift_polynomial(g, rctx));

  if (!maximal) {
    return GradedConePresentation{
        RingPresentation(rctx->table, base.field(), std::move(gr_rels)), false, false,
        rees.gen_degrees};
  }

  // Maximal-ideal case: the quotient is generated by the T classes; present
  // on them alone by eliminating the base variables.
  std::set<std::string> drop(base.table().names().begin(), base.table().names().end());
  IdealPresentation t_only =
      eliminate(IdealPresentation(rctx, std::move(gr_rels)), drop, budget);

  // Filtration grading: every T gets weight 1.
  bool rename = ideal_gens.size() == base.table().size();
  if (rename) {
    for (std::size_t i = 0; i < ideal_gens.size() && rename; ++i) {
      rename = ideal_gens[i].with_context(base.context()) ==
               Polynomial::variable(base.context(), i);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rees.t_names.size(); ++i) {
    names.push_back(rename ? base.table().name(i) : rees.t_names[i]);
  }
  VariableTable gr_table(names, std::vector<std::uint32_t>(names.size(), 1));
  PolyContextPtr gr_ctx = make_context(gr_table, base.field());
  std::vector<Polynomial> rels;
  for (const auto& g : t_only.generators) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back(t);  // same exponent layout
    rels.push_back(Polynomial(gr_ctx, std::move(terms)));
  }
  return GradedConePresentation{RingPresentation(gr_table, base.field(), std::move(rels)),
                                true, rename, rees.gen_degrees};
}

}  // namespace ultk
