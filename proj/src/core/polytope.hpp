#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace ultk {

struct LatticePoint {
  long long x = 0;
  long long y = 0;

  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const LatticePoint& o) const { return x != o.x ? x < o.x : y < o.y; }
};

// Convex lattice polygon plus the full support set it was built from.
// Vertices are the extreme points, counterclockwise, anchored at the
// lexicographically lowest vertex; collinear points are dropped. A single
// point and a two-vertex segment are the degenerate cases.
class LatticePolygon {
public:
  static LatticePolygon from_points(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }

  LatticePolygon translated(const LatticePoint& by) const;
  bool same_shape(const LatticePolygon& other) const { return vertices_ == other.vertices_; }
  LatticePoint lex_min_vertex() const;
  bool contains(const LatticePoint& p) const;

  std::string to_string() const;

private:
  std::vector<LatticePoint> vertices_;
  std::vector<LatticePoint> points_;
};

// Convex hull of the exponent support of p in the two chosen variables;
// every other variable must be absent from p.
LatticePolygon newton_polygon(const Polynomial& p, std::size_t var1, std::size_t var2);

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b);

// Complete search for a Minkowski split into two lattice polygons, each with
// at least one edge, over sub-multisets of the primitive edge vectors.
// Returns the first split in a fixed enumeration order, anchored so the two
// parts sum to the input exactly. Throws ArgError when a vertex coordinate
// exceeds `bound`.
std::optional<std::pair<LatticePolygon, LatticePolygon>> brute_force_decompose(
    const LatticePolygon& poly, long long bound);

struct IndecomposabilityVerdict {
  enum class Kind { Indecomposable, Decomposable, Unknown };
  enum class Path { PointVacuous, SegmentGcd, TriangleGcd, ExhaustiveSearch, None };

  Kind kind = Kind::Unknown;
  Path path = Path::None;
  long long gcd_value = 0;  // the gcd the certificate rests on, for gcd paths
  std::optional<std::pair<LatticePolygon, LatticePolygon>> witness;
  std::string note;
};

// Gao-style certificate: segments and triangles by the gcd criterion,
// everything else by the exhaustive edge split. The criterion is sufficient,
// not necessary, so Decomposable never follows from a failed gcd alone.
IndecomposabilityVerdict integrally_indecomposable(const LatticePolygon& poly,
                                                   long long search_bound = 64);

struct IrreducibilityVerdict {
  enum class Kind { Irreducible, Unknown };

  Kind kind = Kind::Unknown;
  // Monomial content divided out before taking the polygon: exponents of the
  // two chosen variables.
  std::pair<std::uint32_t, std::uint32_t> stripped_content{0, 0};
  LatticePolygon polygon;
  IndecomposabilityVerdict polytope_verdict;
  std::string note;
};

// Irreducible exactly when the polygon is certified integrally
// indecomposable and the content-free part is not a monomial. A decomposable
// polygon yields Unknown, never "reducible".
IrreducibilityVerdict irreducibility_verdict(const Polynomial& p, std::size_t var1,
                                             std::size_t var2, long long search_bound = 64);

}  // namespace ultk
