#include "abhy/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace abhy {

namespace {

// Phase-1 simplex tableau for min sum(artificials) s.t. a x + s = b, x,s >= 0.
// Bland's rule, exact rational pivots.
class Phase1 {
 public:
  Phase1(const RatMatrix& a, const RatVector& b) : m_(a.rows), n_(a.cols) {
    t_.assign(m_ + 1, RatVector(n_ + m_ + 1, Rat(0)));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      int sign = b[i] < 0 ? -1 : 1;
      for (int j = 0; j < n_; ++j) t_[i][j] = sign * a.at(i, j);
      t_[i][n_ + i] = 1;
      t_[i][n_ + m_] = sign * b[i];
      basis_[i] = n_ + i;
    }
    // Reduced-cost row for min sum(z): cost 1 on artificials, then zeroed on
    // the starting basis by subtracting every constraint row.  The rhs cell
    // holds minus the current objective value.
    for (int i = 0; i < m_; ++i) t_[m_][n_ + i] = 1;
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j <= n_ + m_; ++j) t_[m_][j] -= t_[i][j];
  }

  bool feasible() {
    while (true) {
      int col = -1;
      for (int j = 0; j < n_ + m_; ++j)
        if (t_[m_][j] < 0) {  // entering: first improving column (Bland)
          col = j;
          break;
        }
      if (col < 0) break;
      int row = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][col] <= 0) continue;
        Rat ratio = t_[i][n_ + m_] / t_[i][col];
        if (row < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[row])) {
          row = i;
          best = ratio;
        }
      }
      if (row < 0)
        throw std::logic_error("phase-1 objective unbounded below");  // cannot happen
      pivot(row, col);
    }
    return t_[m_][n_ + m_] == 0;
  }

 private:
  void pivot(int row, int col) {
    Rat inv = 1 / t_[row][col];
    for (auto& x : t_[row]) x *= inv;
    for (int i = 0; i <= m_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rat f = t_[i][col];
      for (int j = 0; j <= n_ + m_; ++j) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  int m_, n_;
  std::vector<RatVector> t_;
  std::vector<int> basis_;
};

}  // namespace

bool lp_feasible(const RatMatrix& a, const RatVector& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw std::invalid_argument("lp_feasible: rhs length mismatch");
  return Phase1(a, b).feasible();
}

bool point_in_hull(const RatVector& p, const std::vector<RatVector>& pts) {
  if (pts.empty()) return false;
  int d = static_cast<int>(p.size());
  int k = static_cast<int>(pts.size());
  RatMatrix a(d + 1, k);
  RatVector b(d + 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) a.at(i, j) = pts[j][i];
    b[i] = p[i];
  }
  for (int j = 0; j < k; ++j) a.at(d, j) = 1;
  b[d] = 1;
  return lp_feasible(a, b);
}

std::vector<RatVector> extreme_points(const std::vector<RatVector>& pts) {
  std::vector<RatVector> uniq = pts;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<RatVector> out;
  for (size_t i = 0; i < uniq.size(); ++i) {
    std::vector<RatVector> others;
    others.reserve(uniq.size() - 1);
    for (size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(uniq[j]);
    if (!point_in_hull(uniq[i], others)) out.push_back(uniq[i]);
  }
  return out;
}

VPolytope make_polytope(int ambient_dim, std::vector<RatVector> pts) {
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != ambient_dim)
      throw std::invalid_argument("make_polytope: dimension mismatch");
  VPolytope out;
  out.ambient_dim = ambient_dim;
  out.vertices = extreme_points(pts);
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

SliceVertices vertices_of_slice(const HSlice& s) {
  if (!s.orthant)
    throw std::invalid_argument("vertices_of_slice: orthant constraint is required");
  const int v = s.ambient_dim;
  const int e = static_cast<int>(s.equations.size());
  RatMatrix a(e, v);
  RatVector b(e);
  for (int i = 0; i < e; ++i) {
    if (static_cast<int>(s.equations[i].first.size()) != v)
      throw std::invalid_argument("slice equation has wrong length");
    for (int j = 0; j < v; ++j) a.at(i, j) = s.equations[i].first[j];
    b[i] = s.equations[i].second;
  }

  SliceVertices out;
  if (!lp_feasible(a, b)) {
    out.status = SliceStatus::empty;
    return out;
  }
  {  // nonzero recession direction: a x = 0, sum x = 1, x >= 0
    RatMatrix rec(e + 1, v);
    RatVector rb(e + 1, Rat(0));
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < v; ++j) rec.at(i, j) = a.at(i, j);
    for (int j = 0; j < v; ++j) rec.at(e, j) = 1;
    rb[e] = 1;
    if (lp_feasible(rec, rb)) {
      out.status = SliceStatus::unbounded;
      return out;
    }
  }

  const int d = v - rank(a);
  std::set<RatVector> found;
  std::vector<int> subset(d);
  // iterate over d-subsets of coordinates to pin at zero
  auto solve_subset = [&]() {
    std::vector<bool> zero(v, false);
    for (int k : subset) zero[k] = true;
    std::vector<int> keep;
    for (int j = 0; j < v; ++j)
      if (!zero[j]) keep.push_back(j);
    RatMatrix red(e, static_cast<int>(keep.size()));
    for (int i = 0; i < e; ++i)
      for (size_t j = 0; j < keep.size(); ++j) red.at(i, static_cast<int>(j)) = a.at(i, keep[j]);
    AffineSolution sol = solve_affine(red, b);
    if (!sol.consistent || !sol.homogeneous.empty()) return;  // no unique solution
    RatVector x(v, Rat(0));
    for (size_t j = 0; j < keep.size(); ++j) x[keep[j]] = sol.particular[j];
    for (const Rat& q : x)
      if (q < 0) return;
    found.insert(std::move(x));
  };
  if (d == 0) {
    solve_subset();
  } else {
    for (int i = 0; i < d; ++i) subset[i] = i;
    while (true) {
      solve_subset();
      int i = d - 1;
      while (i >= 0 && subset[i] == v - d + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
    }
  }

  out.status = SliceStatus::ok;
  out.polytope.ambient_dim = v;
  out.polytope.vertices.assign(found.begin(), found.end());
  // Basic feasible solutions of an equality system are exactly the extreme
  // points; re-certify anyway since it is cheap at this scale.
  auto certified = extreme_points(out.polytope.vertices);
  if (certified.size() != out.polytope.vertices.size())
    throw std::logic_error("basic solution failed extremality certification");
  for (const auto& x : out.polytope.vertices) {
    std::vector<int> zs;
    for (int j = 0; j < v; ++j)
      if (x[j] == 0) zs.push_back(j);
    out.zero_sets.push_back(std::move(zs));
  }
  return out;
}

VPolytope project(const VPolytope& p, const std::vector<int>& coords) {
  std::set<int> seen;
  for (int c : coords) {
    if (c < 0 || c >= p.ambient_dim)
      throw std::invalid_argument("project: coordinate out of range");
    if (!seen.insert(c).second)
      throw std::invalid_argument("project: repeated coordinate");
  }
  std::vector<RatVector> pts;
  pts.reserve(p.vertices.size());
  for (const auto& v : p.vertices) {
    RatVector q;
    q.reserve(coords.size());
    for (int c : coords) q.push_back(v[c]);
    pts.push_back(std::move(q));
  }
  return make_polytope(static_cast<int>(coords.size()), std::move(pts));
}

bool projection_injective_on_vertices(const VPolytope& p, const std::vector<int>& coords) {
  std::set<RatVector> images;
  for (const auto& v : p.vertices) {
    RatVector q;
    for (int c : coords) q.push_back(v[c]);
    if (!images.insert(std::move(q)).second) return false;
  }
  return true;
}

VPolytope newton_polytope(const LaurentPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_polytope: zero polynomial");
  std::vector<RatVector> pts;
  for (const auto& [e, c] : f.terms()) {
    RatVector q;
    q.reserve(e.size());
    for (int x : e) q.push_back(Rat(x));
    pts.push_back(std::move(q));
  }
  return make_polytope(f.nvars(), std::move(pts));
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  if (p.ambient_dim != q.ambient_dim)
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<RatVector> pts;
  pts.reserve(p.vertices.size() * q.vertices.size());
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) {
      RatVector s(p.ambient_dim);
      for (int i = 0; i < p.ambient_dim; ++i) s[i] = a[i] + b[i];
      pts.push_back(std::move(s));
    }
  return make_polytope(p.ambient_dim, std::move(pts));
}

Fan make_fan(int ambient_dim, std::vector<std::vector<Int>> rays,
             std::vector<std::vector<int>> cones) {
  // sort rays, remap cone indices, sort cones
  std::vector<int> order(rays.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rays[a] < rays[b]; });
  std::vector<int> inv(rays.size());
  std::vector<std::vector<Int>> sorted;
  sorted.reserve(rays.size());
  for (size_t i = 0; i < order.size(); ++i) {
    inv[order[i]] = static_cast<int>(i);
    sorted.push_back(rays[order[i]]);
  }
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) throw std::invalid_argument("make_fan: duplicate ray");
  for (auto& c : cones) {
    for (int& r : c) r = inv[r];
    std::sort(c.begin(), c.end());
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  Fan f;
  f.ambient_dim = ambient_dim;
  f.rays = std::move(sorted);
  f.maximal_cones = std::move(cones);
  return f;
}

Fan g_vector_fan(const Atlas& atlas) {
  IntMatrix g = g_vector_matrix(atlas);
  std::vector<std::vector<Int>> rays;
  rays.reserve(g.rows);
  for (int i = 0; i < g.rows; ++i) rays.push_back(primitive(g.row(i)));
  std::vector<std::vector<int>> cones;
  cones.reserve(atlas.cluster_count());
  for (const auto& cl : atlas.clusters) cones.push_back(cl.members);
  return make_fan(atlas.n(), std::move(rays), std::move(cones));
}

Fan antipodal_fan(const Fan& f) {
  std::vector<std::vector<Int>> rays;
  rays.reserve(f.rays.size());
  for (const auto& r : f.rays) {
    std::vector<Int> neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    rays.push_back(std::move(neg));
  }
  return make_fan(f.ambient_dim, std::move(rays), f.maximal_cones);
}

bool fan_is_complete_simplicial(const Fan& f) {
  const int n = f.ambient_dim;
  if (f.maximal_cones.empty()) return false;
  std::map<std::vector<int>, int> facet_count;
  for (const auto& cone : f.maximal_cones) {
    if (static_cast<int>(cone.size()) != n) return false;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = f.rays[cone[i]][j];
    if (rank(m) != n) return false;
    for (int drop = 0; drop < n; ++drop) {
      std::vector<int> facet;
      for (int i = 0; i < n; ++i)
        if (i != drop) facet.push_back(cone[i]);
      ++facet_count[facet];
    }
  }
  for (const auto& [facet, count] : facet_count)
    if (count != 2) return false;
  return true;
}

namespace {

// Primitive integer normal of the hyperplane through d affinely independent
// points (d = dim); empty if the points are affinely dependent.
std::vector<Int> hyperplane_normal(const std::vector<const RatVector*>& pts, int dim) {
  RatMatrix diffs(dim - 1, dim);
  for (int i = 0; i + 1 < dim; ++i)
    for (int j = 0; j < dim; ++j) diffs.at(i, j) = (*pts[i + 1])[j] - (*pts[0])[j];
  AffineSolution sol = solve_affine(diffs, RatVector(dim - 1, Rat(0)));
  if (sol.homogeneous.size() != 1) return {};
  std::vector<Int> normal(dim);
  for (int j = 0; j < dim; ++j) normal[j] = to_int_exact(sol.homogeneous[0][j]);
  return normal;
}

}  // namespace

NormalFanResult outer_normal_fan(const VPolytope& p) {
  NormalFanResult res;
  const int n = p.ambient_dim;
  const auto& verts = p.vertices;
  if (verts.empty()) throw std::invalid_argument("outer_normal_fan: empty polytope");

  // affine-hull check
  RatMatrix diffs(static_cast<int>(verts.size()) - 1, n);
  for (size_t i = 1; i < verts.size(); ++i)
    for (int j = 0; j < n; ++j)
      diffs.at(static_cast<int>(i) - 1, j) = verts[i][j] - verts[0][j];
  const int hull_dim = verts.size() == 1 ? 0 : rank(diffs);
  res.full_dimensional = hull_dim == n;

  if (!res.full_dimensional) {
    // Work inside the affine hull: rebuild in hull coordinates, then pull the
    // normals back through the coordinate chart.
    if (hull_dim == 0) {
      res.fan = make_fan(n, {}, {{}});
      return res;
    }
    RatMatrix basis = rref(diffs);  // rows span the direction space
    std::vector<RatVector> coords;
    coords.reserve(verts.size());
    // coordinates: solve basis^T c = v - v0
    RatMatrix bt(n, hull_dim);
    for (int i = 0; i < hull_dim; ++i)
      for (int j = 0; j < n; ++j) bt.at(j, i) = basis.at(i, j);
    for (const auto& v : verts) {
      RatVector rhs(n);
      for (int j = 0; j < n; ++j) rhs[j] = v[j] - verts[0][j];
      AffineSolution sol = solve_affine(bt, rhs);
      if (!sol.consistent) throw std::logic_error("vertex outside its affine hull");
      coords.push_back(sol.particular);
    }
    VPolytope inner;
    inner.ambient_dim = hull_dim;
    inner.vertices = std::move(coords);
    std::sort(inner.vertices.begin(), inner.vertices.end());
    NormalFanResult sub = outer_normal_fan(inner);
    // pull back: functional a on hull coordinates becomes a . basis in ambient space
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<int>> cones = sub.fan.maximal_cones;
    for (const auto& r : sub.fan.rays) {
      RatVector amb(n, Rat(0));
      for (int i = 0; i < hull_dim; ++i)
        for (int j = 0; j < n; ++j) amb[j] += Rat(r[i]) * basis.at(i, j);
      Int den(1);
      for (const auto& q : amb) den = lcm(den, q.get_den());
      std::vector<Int> zi(n);
      for (int j = 0; j < n; ++j) zi[j] = to_int_exact(Rat(amb[j] * den));
      rays.push_back(primitive(zi));
    }
    // cone indices survive, but the vertex correspondence may be permuted by
    // the inner sort; that is fine for reporting on degenerate input.
    res.fan = make_fan(n, std::move(rays), std::move(cones));
    return res;
  }

  // facets: hyperplanes through n affinely independent vertices with all
  // other vertices weakly on one side
  std::set<std::pair<std::vector<Int>, Rat>> facets;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  const int nv = static_cast<int>(verts.size());
  if (nv < n) throw std::logic_error("full-dimensional polytope with too few vertices");
  while (true) {
    std::vector<const RatVector*> pts;
    pts.reserve(n);
    for (int i : idx) pts.push_back(&verts[i]);
    std::vector<Int> normal = n == 1 ? std::vector<Int>{Int(1)} : hyperplane_normal(pts, n);
    if (!normal.empty()) {
      Rat rhs(0);
      for (int j = 0; j < n; ++j) rhs += Rat(normal[j]) * (*pts[0])[j];
      bool below = false, above = false;
      for (const auto& v : verts) {
        Rat s(0);
        for (int j = 0; j < n; ++j) s += Rat(normal[j]) * v[j];
        if (s < rhs) below = true;
        if (s > rhs) above = true;
      }
      if (!(below && above) && (below || above)) {
        if (above) {  // orient outward
          for (auto& x : normal) x = -x;
          rhs = -rhs;
        }
        facets.emplace(std::move(normal), std::move(rhs));
      }
    }
    int i = n - 1;
    while (i >= 0 && idx[i] == nv - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }

  std::vector<std::vector<Int>> rays;
  rays.reserve(facets.size());
  std::vector<std::pair<std::vector<Int>, Rat>> facet_list(facets.begin(), facets.end());
  for (const auto& [a, b] : facet_list) rays.push_back(a);
  std::vector<std::vector<int>> cones;
  cones.reserve(verts.size());
  for (const auto& v : verts) {
    std::vector<int> cone;
    for (size_t fi = 0; fi < facet_list.size(); ++fi) {
      Rat s(0);
      for (int j = 0; j < n; ++j) s += Rat(facet_list[fi].first[j]) * v[j];
      if (s == facet_list[fi].second) cone.push_back(static_cast<int>(fi));
    }
    cones.push_back(std::move(cone));
  }
  res.fan = make_fan(n, std::move(rays), std::move(cones));
  return res;
}

FanCompare fans_equal(const Fan& a, const Fan& b) {
  FanCompare out;
  if (a.ambient_dim != b.ambient_dim) {
    out.mismatch = "ambient dimensions differ";
    return out;
  }
  auto ray_str = [](const std::vector<Int>& r) {
    std::ostringstream s;
    s << "(";
    for (size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << r[i].get_str();
    s << ")";
    return s.str();
  };
  for (const auto& r : a.rays)
    if (!std::binary_search(b.rays.begin(), b.rays.end(), r)) {
      out.mismatch = "ray " + ray_str(r) + " missing from second fan";
      return out;
    }
  for (const auto& r : b.rays)
    if (!std::binary_search(a.rays.begin(), a.rays.end(), r)) {
      out.mismatch = "ray " + ray_str(r) + " missing from first fan";
      return out;
    }
  // identical sorted ray lists => index sets comparable directly
  if (a.maximal_cones != b.maximal_cones) {
    for (const auto& c : a.maximal_cones)
      if (!std::binary_search(b.maximal_cones.begin(), b.maximal_cones.end(), c)) {
        std::ostringstream s;
        s << "cone {";
        for (size_t i = 0; i < c.size(); ++i) s << (i ? "," : "") << ray_str(a.rays[c[i]]);
        s << "} missing from second fan";
        out.mismatch = s.str();
        return out;
      }
    out.mismatch = "second fan has extra maximal cones";
    return out;
  }
  out.equal = true;
  return out;
}

}  // namespace abhy
