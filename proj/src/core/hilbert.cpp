#include "hilbert.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace ultk {

std::vector<mpz_class> HilbertSeries::expand(std::size_t bound) const {
  std::vector<mpz_class> c(bound + 1, mpz_class(0));
  for (std::size_t i = 0; i <= bound; ++i) c[i] = numerator.coefficient(i);
  // Multiplying by 1/(1 - t^w) is a strided prefix sum.
  for (auto w : denominator_weights) {
    for (std::size_t i = w; i <= bound; ++i) c[i] += c[i - w];
  }
  return c;
}

std::string HilbertSeries::to_string() const {
  std::string denom;
  std::map<std::uint32_t, unsigned> counts;
  for (auto w : denominator_weights) counts[w]++;
  for (const auto& [w, e] : counts) {
    if (!denom.empty()) denom += "*";
    denom += "(1-t^" + std::to_string(w) + ")";
    if (e > 1) denom += "^" + std::to_string(e);
  }
  if (denom.empty()) denom = "1";
  return "(" + numerator.to_string() + ") / (" + denom + ")";
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(gens)).generators();
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].coprime(gens[j])) return false;
    }
  }
  return true;
}

ZPoly numerator_rec(std::vector<Monomial> gens, const VariableTable& table) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return ZPoly::one();
  if (gens.size() == 1 && gens[0].is_one()) return ZPoly();  // unit ideal: S/I = 0
  if (pairwise_coprime(gens)) {
    ZPoly acc = ZPoly::one();
    for (const auto& g : gens) {
      acc = acc * one_minus_t_pow(static_cast<std::uint32_t>(g.weighted_degree(table)));
    }
    return acc;
  }
  // Pivot: the most frequent variable (it occurs in >= 2 generators here),
  // raised to the least exponent it carries.
  std::size_t n = table.size();
  std::vector<unsigned> freq(n, 0);
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.exponent(v) > 0) freq[v]++;
    }
  }
  std::size_t pivot_var = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (freq[v] > freq[pivot_var]) pivot_var = v;
  }
  std::uint32_t e = 0;
  for (const auto& g : gens) {
    std::uint32_t ge = g.exponent(pivot_var);
    if (ge > 0 && (e == 0 || ge < e)) e = ge;
  }
  Monomial q = Monomial::variable(n, pivot_var, e);

  // N(I) = N(I + (q)) + t^deg(q) * N(I : q).
  std::vector<Monomial> sum_gens = gens;
  sum_gens.push_back(q);
  std::vector<Monomial> colon_gens;
  colon_gens.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<std::uint32_t> exps = g.exponents();
    exps[pivot_var] -= std::min(exps[pivot_var], e);
    colon_gens.push_back(Monomial(std::move(exps)));
  }
  ZPoly left = numerator_rec(std::move(sum_gens), table);
  ZPoly right = numerator_rec(std::move(colon_gens), table);
  return left + ZPoly::monomial(static_cast<std::size_t>(q.weighted_degree(table)), 1) * right;
}

}  // namespace

ZPoly hilbert_numerator(const MonomialIdeal& ideal, const VariableTable& table) {
  return numerator_rec(ideal.generators(), table);
}

HilbertSeries hilbert_series(const RingPresentation& ring, const GbBudget& budget) {
  HilbertSeries hs;
  hs.numerator = hilbert_numerator(ring.initial_ideal(budget), ring.table());
  hs.denominator_weights = ring.table().weights();
  std::sort(hs.denominator_weights.begin(), hs.denominator_weights.end());
  return hs;
}

unsigned monomial_ideal_dimension(const MonomialIdeal& ideal, std::size_t nvars) {
  if (nvars > 20) {
    throw ArgError("dimension search over " + std::to_string(nvars) +
                   " variables exceeds the supported subset-search size (20)");
  }
  for (const auto& g : ideal.generators()) {
    if (g.is_one()) throw ArgError("dimension of the zero ring is undefined (unit ideal)");
  }
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.generators()) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (g.exponent(v) > 0) s |= (1u << v);
    }
    supports.push_back(s);
  }
  unsigned best = 0;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    bool ok = true;
    for (auto s : supports) {
      if ((s & ~mask) == 0) {  // generator supported inside the subset
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, static_cast<unsigned>(__builtin_popcount(mask)));
  }
  return best;
}

unsigned krull_dim(const RingPresentation& ring, const GbBudget& budget) {
  return monomial_ideal_dimension(ring.initial_ideal(budget), ring.table().size());
}

CompleteIntersectionWitness is_complete_intersection(const RingPresentation& ring,
                                                     const GbBudget& budget) {
  CompleteIntersectionWitness w;
  w.variable_count = ring.table().size();
  w.relation_count = ring.relations().size();
  w.dimension = krull_dim(ring, budget);
  for (const auto& r : ring.relations()) {
    std::uint64_t d = 0;
    r.is_homogeneous(&d);
    w.relation_degrees.push_back(d);
  }
  w.is_ci = (w.variable_count - w.dimension == w.relation_count);
  if (w.is_ci) {
    w.koszul_numerator = ZPoly::one();
    for (auto d : w.relation_degrees) {
      w.koszul_numerator =
          w.koszul_numerator * one_minus_t_pow(static_cast<std::uint32_t>(d));
    }
    w.hilbert_identity = hilbert_series(ring, budget).numerator == w.koszul_numerator;
    if (!w.hilbert_identity) {
      throw Error(
          "internal: codimension matches the relation count but the Hilbert numerator "
          "is not the Koszul product");
    }
  }
  return w;
}

}  // namespace ultk
