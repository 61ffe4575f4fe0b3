#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "abhy/polytope.hpp"
#include "abhy/universal.hpp"

namespace abhy {

/// The affine slice data for a base matrix b and positive constants c,
/// one per non-initial dual cluster variable.
struct SliceSpec {
  IntMatrix b;
  std::shared_ptr<const Atlas> dual_atlas;
  std::vector<MeshRelation> relations;  // ordered by non-initial index
  std::vector<Rat> c;                   // c[r] belongs to variable n+r
  HSlice slice;

  int n() const { return b.rows; }
  int v() const { return dual_atlas->variable_count(); }
};

/// Equation w_j + w_i - sum_{k in C \ i} b(C)_{ki} w_k = c_i for every
/// non-initial i, assembled from the positive mesh partners.
SliceSpec build_slice(const IntMatrix& b, const std::vector<Rat>& c,
                      int cap = kDefaultCap);

/// The slice polytope U_c and its coordinate projection A_c.  Both exact;
/// empty or unbounded slices are rejected with an exception.
VPolytope u_polytope(const SliceSpec& spec);
VPolytope a_polytope(const SliceSpec& spec, std::vector<int> coords = {});

/// The normalized left-kernel basis of b^univ: rows [I_n | X] express the
/// top rows of b through the coefficient rows, rows [0 | mesh] are the
/// mesh relations among the dual g-vectors.
struct KernelBasis {
  IntMatrix k;  // v x (n + v)
  int n = 0;
  int v = 0;
};

KernelBasis kernel_matrix(const UniversalMatrix& u);

/// The reduction level: first n entries free, last v - n strictly positive.
struct ReductionLevel {
  RatVector chat;
  int n = 0;

  ReductionLevel(RatVector chat_, int n_);
  static ReductionLevel defaults(int n, int v);  // zeros then ones

  RatVector tail() const { return RatVector(chat.begin() + n, chat.end()); }
};

/// Result of slicing the moment image R^n x R^v_{>=0} along K (u, w) = chat.
struct MomentImage {
  std::vector<std::string> equations;  // the full (u, w) system, one line each
  HSlice reduced;                      // w-equations after eliminating u
  SliceStatus status = SliceStatus::empty;
  VPolytope polytope;                  // in w-coordinates
};

MomentImage reduced_moment_image(const UniversalMatrix& u, const KernelBasis& k,
                                 const ReductionLevel& chat);

struct TheoremReport {
  bool vertices_equal = false;
  size_t vertex_count = 0;
  bool fans_match = false;
  bool projection_injective = false;
  VPolytope from_moment;
  VPolytope from_slice;
  std::string detail;

  bool pass() const { return vertices_equal && fans_match; }
};

/// Runs both pipelines independently: the kernel-matrix route through the
/// moment image and the mesh-partner route through the slice, then compares
/// vertex sets exactly and checks the outer normal fan of A_c against the
/// dual g-vector fan through the antipodal map (the convention fixed by the
/// rank-2 experiment; for skew-symmetric b it coincides with the g-vector
/// fan of A(b) itself).
TheoremReport verify_theorem(const IntMatrix& b, const ReductionLevel& chat,
                             int cap = kDefaultCap);

/// The comparison fan used by verify_theorem.
Fan theorem_comparison_fan(const Atlas& dual_atlas);

/// A point of the torus patch in polar coordinates; the first n moduli are
/// strictly positive.
struct MomentPoint {
  int n = 0;
  std::vector<double> r;
  std::vector<double> theta;
};

/// (-log r_1, ..., -log r_n, r_{n+1}^2 / 2, ..., r_{n+v}^2 / 2).
/// Floating point; demo and sanity checks only, never in correctness paths.
std::vector<double> moment_map_eval(const MomentPoint& p);

/// Deterministic random level for property suites: small integers for the
/// free entries, small positive rationals for the rest.
ReductionLevel random_reduction_level(int n, int v, std::mt19937_64& rng);

/// Rendering helpers shared by the CLI and the golden tests.  Variables are
/// named w1..wv (or u1..un for the leading block of a full kernel row);
/// rhs may be symbolic ("c3") or a number.
std::string render_equation(const std::vector<std::pair<std::string, Rat>>& terms,
                            const std::string& rhs);
std::vector<std::string> render_slice_equations(const SliceSpec& spec, bool numeric_rhs);

}  // namespace abhy
