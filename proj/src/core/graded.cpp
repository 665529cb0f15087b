#include "graded.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace ultk {

void RowSpace::reduce(std::vector<Coeff>& row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t p = pivots_[r];
    if (field_.is_zero(row[p])) continue;
    Coeff factor = row[p];
    for (std::size_t c = p; c < width_; ++c) {
      row[c] = field_.sub(row[c], field_.mul(factor, rows_[r][c]));
    }
  }
}

bool RowSpace::insert(std::vector<Coeff> row) {
  if (row.size() != width_) throw ArgError("row width mismatch");
  reduce(row);
  std::size_t pivot = width_;
  for (std::size_t c = 0; c < width_; ++c) {
    if (!field_.is_zero(row[c])) {
      pivot = c;
      break;
    }
  }
  if (pivot == width_) return false;
  Coeff inv = field_.inv(row[pivot]);
  for (std::size_t c = pivot; c < width_; ++c) row[c] = field_.mul(row[c], inv);
  // Keep rows ordered by pivot column.
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < pivot) ++at;
  rows_.insert(rows_.begin() + at, std::move(row));
  pivots_.insert(pivots_.begin() + at, pivot);
  return true;
}

bool RowSpace::contains(std::vector<Coeff> row) const {
  if (row.size() != width_) throw ArgError("row width mismatch");
  reduce(row);
  for (const auto& c : row) {
    if (!field_.is_zero(c)) return false;
  }
  return true;
}

std::optional<std::size_t> RowSpace::first_pivotless_column() const {
  std::size_t r = 0;
  for (std::size_t c = 0; c < width_; ++c) {
    if (r < pivots_.size() && pivots_[r] == c) {
      ++r;
    } else {
      return c;
    }
  }
  return std::nullopt;
}

namespace {

// Coordinate vector of a normal form in the degree's standard-monomial
// basis. The normal form only involves standard monomials, so lookup never
// misses.
std::vector<Coeff> coordinates(const Polynomial& nf, const std::vector<Monomial>& basis,
                               const CoefficientField& field) {
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;
  std::vector<Coeff> row(basis.size(), field.zero());
  for (const auto& t : nf.terms()) {
    auto it = index.find(t.mono.exponents());
    if (it == index.end()) {
      throw Error("internal: normal form contains a non-standard monomial");
    }
    row[it->second] = t.coeff;
  }
  return row;
}

struct DegreeData {
  std::vector<Monomial> basis;
  std::map<std::vector<std::uint32_t>, std::size_t> index;
};

class DegreeCache {
public:
  DegreeCache(const RingPresentation& ring, const GbBudget& budget)
      : ring_(ring), gb_(&ring.groebner(budget)), initial_(ring.initial_ideal(budget)) {}

  const DegreeData& at(std::uint64_t d) {
    auto it = data_.find(d);
    if (it != data_.end()) return it->second;
    DegreeData dd;
    dd.basis = monomials_of_degree(ring_.table(), d, initial_, ring_.context()->order);
    for (std::size_t i = 0; i < dd.basis.size(); ++i) dd.index[dd.basis[i].exponents()] = i;
    return data_.emplace(d, std::move(dd)).first->second;
  }

  // Coordinate vector of nf(m * p) in degree deg(m) + deg(p).
  std::vector<Coeff> product_row(const Monomial& m, const Polynomial& p, std::uint64_t target) {
    const DegreeData& dd = at(target);
    Polynomial prod = Polynomial::from_monomial(ring_.context(), m, ring_.field().one()) * p;
    Polynomial nf = normal_form(prod, *gb_);
    std::vector<Coeff> row(dd.basis.size(), ring_.field().zero());
    for (const auto& t : nf.terms()) {
      auto it = dd.index.find(t.mono.exponents());
      if (it == dd.index.end()) {
        throw Error("internal: normal form contains a non-standard monomial");
      }
      row[it->second] = t.coeff;
    }
    return row;
  }

  const RingPresentation& ring() const { return ring_; }
  const GroebnerBasis& gb() const { return *gb_; }

private:
  const RingPresentation& ring_;
  const GroebnerBasis* gb_;
  MonomialIdeal initial_;
  std::map<std::uint64_t, DegreeData> data_;
};

}  // namespace

QuotientLengthResult quotient_length(const RingPresentation& ring,
                                     const std::vector<Polynomial>& extra,
                                     const GbBudget& budget) {
  std::vector<Polynomial> gens = ring.relations();
  for (const auto& p : extra) {
    if (p.is_zero()) continue;
    if (!p.context()->same_ambient(*ring.context())) {
      throw AmbientMismatch("quotient_length: extra generator in a different ambient");
    }
    if (!p.is_homogeneous()) {
      throw ArgError("quotient_length: extra generator '" + p.to_string() +
                     "' is not weighted-homogeneous");
    }
    gens.push_back(p.with_context(ring.context()));
  }
  const GroebnerBasis& gb =
      buchberger_cached(IdealPresentation(ring.context(), std::move(gens)),
                        ring.context()->order, budget);
  if (gb.is_trivial_unit_ideal()) return {true, 0};
  MonomialIdeal initial(gb.leading_monomials());

  std::size_t n = ring.table().size();
  // Finite colength needs a pure power of every variable in the initial
  // ideal; the exponents also bound the standard-monomial box.
  std::vector<std::uint32_t> box(n, 0);
  for (const auto& g : initial.generators()) {
    std::size_t support_var = n;
    bool pure = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.exponent(v) > 0) {
        if (support_var != n) {
          pure = false;
          break;
        }
        support_var = v;
      }
    }
    if (pure && support_var != n) {
      std::uint32_t e = g.exponent(support_var);
      if (box[support_var] == 0 || e < box[support_var]) box[support_var] = e;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (box[v] == 0) return {false, 0};
  }

  std::uint64_t count = 0;
  std::vector<std::uint32_t> exps(n, 0);
  auto rec = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      if (!initial.contains_monomial(Monomial(exps))) ++count;
      return;
    }
    for (std::uint32_t e = 0; e < box[var]; ++e) {
      exps[var] = e;
      self(self, var + 1);
    }
    exps[var] = 0;
  };
  rec(rec, 0);
  return {true, count};
}

std::uint64_t multiplicity_via_reduction(const RingPresentation& ring,
                                         const std::vector<Polynomial>& params,
                                         const GbBudget& budget) {
  unsigned dim = krull_dim(ring, budget);
  if (params.size() != dim) {
    throw ArgError("multiplicity: expected " + std::to_string(dim) +
                   " parameters (the Krull dimension), got " + std::to_string(params.size()));
  }
  QuotientLengthResult len = quotient_length(ring, params, budget);
  if (!len.finite) {
    throw ArgError("multiplicity: the given elements are not a system of parameters "
                   "(quotient has infinite length)");
  }
  return len.length;
}

SurjectivityResult multiplication_surjective(const RingPresentation& ring, std::uint64_t a,
                                             std::uint64_t j, const GbBudget& budget) {
  if (a < 1 || j < 1) throw ArgError("multiplication_surjective: require a >= 1 and j >= 1");
  DegreeCache cache(ring, budget);
  const auto& ba = cache.at(a).basis;
  const auto& bj = cache.at(j).basis;
  const auto& bt = cache.at(a + j).basis;

  SurjectivityResult res;
  res.dim_a = ba.size();
  res.dim_j = bj.size();
  res.dim_target = bt.size();
  RowSpace space(ring.field(), bt.size());
  for (const auto& u : ba) {
    if (space.full()) break;
    Polynomial pu = Polynomial::from_monomial(ring.context(), u, ring.field().one());
    for (const auto& v : bj) {
      if (space.full()) break;
      space.insert(cache.product_row(v, pu, a + j));
    }
  }
  res.rank = space.rank();
  res.surjective = space.full();
  if (!res.surjective) {
    if (auto col = space.first_pivotless_column()) res.missing = bt[*col];
  }
  return res;
}

TruncationResult truncation_power_check(const RingPresentation& ring, unsigned a, unsigned j_max,
                                        const GbBudget& budget) {
  if (a < 1 || j_max < 1) throw ArgError("truncation_power_check: require a >= 1, j_max >= 1");
  TruncationResult res;
  res.a = a;
  res.j_max = j_max;
  std::uint64_t dmax = static_cast<std::uint64_t>(j_max) * a + 2ull * a;
  res.max_degree_checked = dmax;
  DegreeCache cache(ring, budget);

  // power[d] holds a row space for (m^j)_d; j = 1 is all of S_d in degree
  // d >= 1.
  std::vector<RowSpace> power;
  std::vector<std::vector<Polynomial>> power_polys(dmax + 1);
  for (std::uint64_t d = 0; d <= dmax; ++d) {
    const auto& basis = cache.at(d).basis;
    RowSpace space(ring.field(), basis.size());
    if (d >= 1) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Coeff> row(basis.size(), ring.field().zero());
        row[i] = ring.field().one();
        space.insert(std::move(row));
        power_polys[d].push_back(
            Polynomial::from_monomial(ring.context(), basis[i], ring.field().one()));
      }
    }
    power.push_back(std::move(space));
  }

  auto record_check = [&](unsigned j, const std::vector<RowSpace>& spaces) {
    std::uint64_t lo = static_cast<std::uint64_t>(j) * a;
    std::uint64_t hi = std::min<std::uint64_t>(lo + 2ull * a, dmax);
    for (std::uint64_t d = lo; d <= hi; ++d) {
      const auto& basis = cache.at(d).basis;
      if (spaces[d].rank() == basis.size()) continue;
      TruncationFailure f;
      f.power = j;
      f.degree = d;
      if (auto col = spaces[d].first_pivotless_column()) f.missing = basis[*col];
      res.failures.push_back(std::move(f));
    }
  };

  record_check(1, power);
  for (unsigned j = 2; j <= j_max; ++j) {
    std::vector<RowSpace> next;
    std::vector<std::vector<Polynomial>> next_polys(dmax + 1);
    for (std::uint64_t d = 0; d <= dmax; ++d) {
      const auto& basis = cache.at(d).basis;
      RowSpace space(ring.field(), basis.size());
      for (std::uint64_t e = 1; e <= d; ++e) {
        const auto& be = cache.at(e).basis;
        if (be.empty()) continue;
        for (const auto& w : power_polys[d - e]) {
          for (const auto& m : be) {
            if (space.full()) break;
            std::vector<Coeff> row = cache.product_row(m, w, d);
            if (space.insert(row)) {
              // Keep the polynomial form of each independent row so the
              // next power multiplies genuine elements of m^j.
              Polynomial p =
                  Polynomial::from_monomial(ring.context(), m, ring.field().one()) * w;
              next_polys[d].push_back(normal_form(p, cache.gb()));
            }
          }
          if (space.full()) break;
        }
        if (space.full()) break;
      }
      next.push_back(std::move(space));
    }
    record_check(j, next);
    power = std::move(next);
    power_polys = std::move(next_polys);
  }

  std::sort(res.failures.begin(), res.failures.end(),
            [](const TruncationFailure& x, const TruncationFailure& y) {
              return std::tie(x.power, x.degree) < std::tie(y.power, y.degree);
            });
  res.ok = res.failures.empty();
  return res;
}

ModuleSpanResult module_generation_check(const RingPresentation& ring, std::uint64_t a,
                                         const std::vector<Polynomial>& gens,
                                         std::uint64_t bound, const GbBudget& budget) {
  if (a < 1) throw ArgError("module_generation_check: require a >= 1");
  DegreeCache cache(ring, budget);
  ModuleSpanResult res;
  res.checked_up_to = bound;

  std::vector<std::pair<std::uint64_t, Polynomial>> gen_list;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    std::uint64_t d = 0;
    Polynomial gp = g.with_context(ring.context());
    if (!gp.is_homogeneous(&d)) {
      throw ArgError("module generator '" + g.to_string() + "' is not weighted-homogeneous");
    }
    gen_list.emplace_back(d, normal_form(gp, cache.gb()));
  }

  // algebra[m]: polynomial basis of (k[S_a])_m inside S, built degree by
  // degree; zero except in degrees divisible by a (and degree 0).
  std::vector<std::vector<Polynomial>> algebra(bound + 1);
  if (bound + 1 > 0) {
    algebra[0].push_back(Polynomial::constant(ring.context(), ring.field().one()));
  }
  for (std::uint64_t m = a; m <= bound; ++m) {
    if (algebra[m - a].empty()) continue;
    const auto& basis_m = cache.at(m).basis;
    if (basis_m.empty()) continue;
    RowSpace space(ring.field(), basis_m.size());
    const auto& ba = cache.at(a).basis;
    for (const auto& w : algebra[m - a]) {
      for (const auto& u : ba) {
        if (space.full()) break;
        std::vector<Coeff> row = cache.product_row(u, w, m);
        if (space.insert(row)) {
          Polynomial p =
              Polynomial::from_monomial(ring.context(), u, ring.field().one()) * w;
          algebra[m].push_back(normal_form(p, cache.gb()));
        }
      }
      if (space.full()) break;
    }
  }

  for (std::uint64_t d = 0; d <= bound; ++d) {
    const auto& basis = cache.at(d).basis;
    if (basis.empty()) continue;
    RowSpace space(ring.field(), basis.size());
    for (const auto& [dg, g] : gen_list) {
      if (dg > d) continue;
      for (const auto& alpha : algebra[d - dg]) {
        if (space.full()) break;
        Polynomial prod = alpha * g;
        space.insert(coordinates(normal_form(prod, cache.gb()), basis, ring.field()));
      }
      if (space.full()) break;
    }
    if (!space.full()) {
      res.ok = false;
      res.first_failure_degree = d;
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace ultk
