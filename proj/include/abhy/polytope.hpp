#pragma once

#include <string>
#include <vector>

#include "abhy/cluster.hpp"
#include "abhy/matrix.hpp"

namespace abhy {

/// Exact feasibility of {x >= 0 : a x == b} by phase-1 simplex with Bland's rule.
bool lp_feasible(const RatMatrix& a, const RatVector& b);

/// Is p a convex combination of pts?
bool point_in_hull(const RatVector& p, const std::vector<RatVector>& pts);

/// Extreme points of a finite point set, certified by exact LP.
std::vector<RatVector> extreme_points(const std::vector<RatVector>& pts);

/// Affine equations over w_1..w_v intersected (when orthant is set) with w >= 0.
struct HSlice {
  int ambient_dim = 0;
  std::vector<std::pair<RatVector, Rat>> equations;
  bool orthant = true;
};

/// Vertex-form polytope; the vertex list is irredundant and sorted
/// lexicographically.
struct VPolytope {
  int ambient_dim = 0;
  std::vector<RatVector> vertices;

  bool operator==(const VPolytope& o) const {
    return ambient_dim == o.ambient_dim && vertices == o.vertices;
  }
};

/// Extreme-point filter + canonical sort over an arbitrary finite point set.
VPolytope make_polytope(int ambient_dim, std::vector<RatVector> pts);

enum class SliceStatus { ok, empty, unbounded };

struct SliceVertices {
  SliceStatus status = SliceStatus::empty;
  VPolytope polytope;
  /// Per vertex (aligned with polytope.vertices): the set of zero coordinates.
  std::vector<std::vector<int>> zero_sets;
};

/// Exact vertex enumeration by basic feasible solutions: zero out
/// dim - rank(equations) coordinates at a time and keep the unique feasible
/// solutions.  Emptiness and unboundedness are detected first by LP.
SliceVertices vertices_of_slice(const HSlice& s);

/// Coordinate projection followed by extreme-point filtering.
VPolytope project(const VPolytope& p, const std::vector<int>& coords);
bool projection_injective_on_vertices(const VPolytope& p, const std::vector<int>& coords);

/// Convex hull of the exponent vectors of a nonzero Laurent polynomial.
VPolytope newton_polytope(const LaurentPoly& f);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

/// Finite fan given by primitive ray generators and maximal cones as
/// ray-index sets; rays and cones are kept in canonical sorted order.
struct Fan {
  int ambient_dim = 0;
  std::vector<std::vector<Int>> rays;
  std::vector<std::vector<int>> maximal_cones;
};

Fan make_fan(int ambient_dim, std::vector<std::vector<Int>> rays,
             std::vector<std::vector<int>> cones);

/// Rays are the primitive g-vectors; one maximal cone per cluster.
Fan g_vector_fan(const Atlas& atlas);

/// Negate every ray, keeping the cone structure.
Fan antipodal_fan(const Fan& f);

/// Simplicial completeness: every cone has n independent rays and every
/// (n-1)-subset facet is shared by exactly two maximal cones.
bool fan_is_complete_simplicial(const Fan& f);

struct NormalFanResult {
  Fan fan;
  bool full_dimensional = true;  // degenerate input is reported, not fatal
};

/// One maximal cone per vertex, generated by the outer normals of the facets
/// through it.  For lower-dimensional polytopes the facets are taken inside
/// the affine hull and the cones omit the lineality directions.
NormalFanResult outer_normal_fan(const VPolytope& p);

struct FanCompare {
  bool equal = false;
  std::string mismatch;  // first difference if any
};

FanCompare fans_equal(const Fan& a, const Fan& b);

}  // namespace abhy
