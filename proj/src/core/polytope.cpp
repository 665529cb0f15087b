#include "polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "errors.hpp"

namespace ultk {

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

long long gcd_ll(long long a, long long b) {
  return std::gcd(std::llabs(a), std::llabs(b));
}

}  // namespace

LatticePolygon LatticePolygon::from_points(std::vector<LatticePoint> points) {
  if (points.empty()) throw ArgError("polygon needs at least one point");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolygon poly;
  poly.points_ = points;
  if (points.size() == 1) {
    poly.vertices_ = points;
    return poly;
  }
  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  std::vector<LatticePoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {  // upper chain
    const auto& p = points[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k > 1 ? k - 1 : k);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  poly.vertices_ = std::move(hull);
  return poly;
}

LatticePolygon LatticePolygon::translated(const LatticePoint& by) const {
  LatticePolygon out = *this;
  for (auto& v : out.vertices_) v = v + by;
  for (auto& p : out.points_) p = p + by;
  return out;
}

LatticePoint LatticePolygon::lex_min_vertex() const { return vertices_.front(); }

bool LatticePolygon::contains(const LatticePoint& p) const {
  if (vertices_.size() == 1) return p == vertices_[0];
  if (vertices_.size() == 2) {
    const auto& a = vertices_[0];
    const auto& b = vertices_[1];
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    if (cross(a, b, p) < 0) return false;  // CCW polygon: inside is left of every edge
  }
  return true;
}

std::string LatticePolygon::to_string() const {
  std::string out;
  for (const auto& v : vertices_) {
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
  }
  return "[" + out + "]";
}

LatticePolygon newton_polygon(const Polynomial& p, std::size_t var1, std::size_t var2) {
  if (p.is_zero()) throw ArgError("newton polygon of the zero polynomial");
  const auto& table = p.table();
  if (var1 >= table.size() || var2 >= table.size() || var1 == var2) {
    throw ArgError("newton polygon needs two distinct ambient variables");
  }
  std::vector<LatticePoint> support;
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < table.size(); ++v) {
      if (v != var1 && v != var2 && t.mono.exponent(v) > 0) {
        throw ArgError("polynomial involves variable '" + table.name(v) +
                       "' outside the chosen pair; substitute it away first");
      }
    }
    support.push_back(LatticePoint{static_cast<long long>(t.mono.exponent(var1)),
                                   static_cast<long long>(t.mono.exponent(var2))});
  }
  return LatticePolygon::from_points(std::move(support));
}

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
  std::vector<LatticePoint> sums;
  for (const auto& va : a.vertices()) {
    for (const auto& vb : b.vertices()) sums.push_back(va + vb);
  }
  return LatticePolygon::from_points(std::move(sums));
}

namespace {

// Angular comparator on nonzero integer vectors: upper half-plane first
// (starting at direction (1,0)), then the lower one, CCW within each.
bool angle_less(const LatticePoint& a, const LatticePoint& b) {
  auto half = [](const LatticePoint& p) { return p.y > 0 || (p.y == 0 && p.x > 0) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  long long cr = a.x * b.y - a.y * b.x;
  if (cr != 0) return cr > 0;
  return a < b;
}

struct EdgeVector {
  LatticePoint dir;       // primitive
  long long multiplicity; // lattice length along this direction
};

std::vector<EdgeVector> edge_multiset(const LatticePolygon& poly) {
  std::vector<EdgeVector> edges;
  const auto& vs = poly.vertices();
  if (vs.size() == 1) return edges;
  if (vs.size() == 2) {
    LatticePoint d = vs[1] - vs[0];
    long long g = gcd_ll(d.x, d.y);
    edges.push_back({LatticePoint{d.x / g, d.y / g}, g});
    edges.push_back({LatticePoint{-d.x / g, -d.y / g}, g});
  } else {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      LatticePoint d = vs[(i + 1) % vs.size()] - vs[i];
      long long g = gcd_ll(d.x, d.y);
      edges.push_back({LatticePoint{d.x / g, d.y / g}, g});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const EdgeVector& a, const EdgeVector& b) { return angle_less(a.dir, b.dir); });
  return edges;
}

// Convex polygon traced by the given edge multiset (which must sum to zero),
// anchored at the origin.
LatticePolygon polygon_from_edges(const std::vector<EdgeVector>& edges) {
  std::vector<EdgeVector> sorted = edges;
  std::sort(sorted.begin(), sorted.end(),
            [](const EdgeVector& a, const EdgeVector& b) { return angle_less(a.dir, b.dir); });
  std::vector<LatticePoint> pts;
  LatticePoint cur{0, 0};
  pts.push_back(cur);
  for (const auto& e : sorted) {
    for (long long i = 0; i < e.multiplicity; ++i) {
      cur = cur + e.dir;
      pts.push_back(cur);
    }
  }
  return LatticePolygon::from_points(std::move(pts));
}

}  // namespace

std::optional<std::pair<LatticePolygon, LatticePolygon>> brute_force_decompose(
    const LatticePolygon& poly, long long bound) {
  for (const auto& v : poly.vertices()) {
    if (std::llabs(v.x) > bound || std::llabs(v.y) > bound) {
      throw ArgError("decomposition search bound exceeded (coordinate " + std::to_string(v.x) +
                     "," + std::to_string(v.y) + " beyond " + std::to_string(bound) + ")");
    }
  }
  std::vector<EdgeVector> edges = edge_multiset(poly);
  if (edges.empty()) return std::nullopt;

  // Enumerate sub-multisets: counts[i] in [0, multiplicity_i], lexicographic.
  std::vector<long long> counts(edges.size(), 0);
  auto advance = [&]() -> bool {
    for (std::size_t i = counts.size(); i-- > 0;) {
      if (counts[i] < edges[i].multiplicity) {
        ++counts[i];
        std::fill(counts.begin() + i + 1, counts.end(), 0);
        return true;
      }
    }
    return false;
  };
  while (advance()) {
    bool all = true;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] != edges[i].multiplicity) {
        all = false;
        break;
      }
    }
    if (all) break;  // the full multiset is the polygon itself
    LatticePoint sum{0, 0};
    for (std::size_t i = 0; i < counts.size(); ++i) {
      sum.x += counts[i] * edges[i].dir.x;
      sum.y += counts[i] * edges[i].dir.y;
    }
    if (sum.x != 0 || sum.y != 0) continue;

    std::vector<EdgeVector> part, rest;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] > 0) part.push_back({edges[i].dir, counts[i]});
      long long r = edges[i].multiplicity - counts[i];
      if (r > 0) rest.push_back({edges[i].dir, r});
    }
    LatticePolygon a = polygon_from_edges(part);
    LatticePolygon b = polygon_from_edges(rest);
    // Anchor so the Minkowski sum reproduces the input exactly.
    LatticePoint shift = poly.lex_min_vertex() - a.lex_min_vertex() - b.lex_min_vertex();
    a = a.translated(shift);
    return std::make_pair(a, b);
  }
  return std::nullopt;
}

IndecomposabilityVerdict integrally_indecomposable(const LatticePolygon& poly,
                                                   long long search_bound) {
  IndecomposabilityVerdict v;
  const auto& vs = poly.vertices();
  if (vs.size() == 1) {
    v.kind = IndecomposabilityVerdict::Kind::Indecomposable;
    v.path = IndecomposabilityVerdict::Path::PointVacuous;
    v.note = "single lattice point (monomial); criterion inapplicable to irreducibility";
    return v;
  }
  if (vs.size() == 2) {
    LatticePoint d = vs[1] - vs[0];
    long long g = gcd_ll(d.x, d.y);
    v.gcd_value = g;
    if (g == 1) {
      v.kind = IndecomposabilityVerdict::Kind::Indecomposable;
      v.path = IndecomposabilityVerdict::Path::SegmentGcd;
      v.note = "primitive segment: gcd of the endpoint difference is 1";
      return v;
    }
    v.kind = IndecomposabilityVerdict::Kind::Decomposable;
    v.path = IndecomposabilityVerdict::Path::SegmentGcd;
    v.witness = brute_force_decompose(poly, std::max({std::llabs(d.x), std::llabs(d.y),
                                                      search_bound}));
    v.note = "segment of lattice length " + std::to_string(g);
    return v;
  }
  if (vs.size() == 3) {
    LatticePoint e1 = vs[1] - vs[0];
    LatticePoint e2 = vs[2] - vs[0];
    long long g = std::gcd(gcd_ll(e1.x, e1.y), gcd_ll(e2.x, e2.y));
    v.gcd_value = g;
    if (g == 1) {
      v.kind = IndecomposabilityVerdict::Kind::Indecomposable;
      v.path = IndecomposabilityVerdict::Path::TriangleGcd;
      v.note = "triangle: gcd of the coordinates of two edge vectors from a vertex is 1";
      return v;
    }
  }
  // Quadrilaterals and beyond, or a triangle the gcd test does not settle:
  // run the complete edge-split search.
  try {
    auto split = brute_force_decompose(poly, search_bound);
    if (split) {
      v.kind = IndecomposabilityVerdict::Kind::Decomposable;
      v.path = IndecomposabilityVerdict::Path::ExhaustiveSearch;
      v.witness = std::move(split);
      v.note = "edge-split search found a Minkowski decomposition";
    } else {
      v.kind = IndecomposabilityVerdict::Kind::Indecomposable;
      v.path = IndecomposabilityVerdict::Path::ExhaustiveSearch;
      v.note = "edge-split search exhausted without finding a decomposition";
    }
  } catch (const ArgError&) {
    v.kind = IndecomposabilityVerdict::Kind::Unknown;
    v.path = IndecomposabilityVerdict::Path::None;
    v.note = "search bound exceeded; no verdict";
  }
  return v;
}

IrreducibilityVerdict irreducibility_verdict(const Polynomial& p, std::size_t var1,
                                             std::size_t var2, long long search_bound) {
  if (p.is_zero()) throw ArgError("irreducibility verdict of the zero polynomial");
  IrreducibilityVerdict out;

  // Strip monomial content in the two chosen variables.
  std::uint32_t min1 = UINT32_MAX, min2 = UINT32_MAX;
  for (const auto& t : p.terms()) {
    min1 = std::min(min1, t.mono.exponent(var1));
    min2 = std::min(min2, t.mono.exponent(var2));
  }
  Polynomial stripped = p;
  if (min1 > 0 || min2 > 0) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      auto exps = t.mono.exponents();
      exps[var1] -= min1;
      exps[var2] -= min2;
      terms.push_back(Term{Monomial(std::move(exps)), t.coeff});
    }
    stripped = Polynomial(p.context(), std::move(terms));
  }
  out.stripped_content = {min1, min2};

  out.polygon = newton_polygon(stripped, var1, var2);
  if (stripped.term_count() == 1) {
    out.kind = IrreducibilityVerdict::Kind::Unknown;
    out.polytope_verdict = integrally_indecomposable(out.polygon, search_bound);
    out.note = "monomial after content stripping; the polytope criterion does not apply";
    return out;
  }
  out.polytope_verdict = integrally_indecomposable(out.polygon, search_bound);
  if (out.polytope_verdict.kind == IndecomposabilityVerdict::Kind::Indecomposable) {
    out.kind = IrreducibilityVerdict::Kind::Irreducible;
    out.note =
        "Newton polygon is integrally indecomposable: the content-free part is "
        "irreducible over every extension of the coefficient field";
  } else {
    out.kind = IrreducibilityVerdict::Kind::Unknown;
    out.note =
        "polytope is decomposable or undecided; this does not certify reducibility";
  }
  return out;
}

}  // namespace ultk
