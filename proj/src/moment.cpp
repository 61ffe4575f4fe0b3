#include "abhy/moment.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace abhy {

SliceSpec build_slice(const IntMatrix& b, const std::vector<Rat>& c, int cap) {
  SliceSpec spec;
  spec.b = b;
  UniversalMatrix u = universal_extension(b, cap);
  spec.dual_atlas = u.dual_atlas;
  const int n = b.rows, v = u.v();
  if (static_cast<int>(c.size()) != v - n)
    throw std::invalid_argument("build_slice: expected " + std::to_string(v - n) +
                                " slice constants, got " + std::to_string(c.size()));
  for (const Rat& ci : c)
    if (ci <= 0) throw std::invalid_argument("build_slice: slice constants must be positive");
  spec.c = c;
  spec.relations = mesh_relations(*spec.dual_atlas);
  spec.slice.ambient_dim = v;
  spec.slice.orthant = true;
  for (int r = 0; r < v - n; ++r) {
    // w_j + w_i - sum_{k in C \ i} b(C)_{ki} w_k: the mesh relation coefficients
    const MeshRelation& rel = spec.relations[r];
    RatVector coeffs(v);
    for (int j = 0; j < v; ++j) coeffs[j] = Rat(rel.coefficients[j]);
    spec.slice.equations.emplace_back(std::move(coeffs), c[r]);
  }
  return spec;
}

VPolytope u_polytope(const SliceSpec& spec) {
  SliceVertices sv = vertices_of_slice(spec.slice);
  if (sv.status == SliceStatus::empty)
    throw std::runtime_error("slice polytope is empty");
  if (sv.status == SliceStatus::unbounded)
    throw std::runtime_error("slice polytope is unbounded");
  return sv.polytope;
}

VPolytope a_polytope(const SliceSpec& spec, std::vector<int> coords) {
  if (coords.empty())
    for (int i = 0; i < spec.n(); ++i) coords.push_back(i);
  return project(u_polytope(spec), coords);
}

KernelBasis kernel_matrix(const UniversalMatrix& u) {
  const int n = u.n(), v = u.v();
  KernelBasis kb;
  kb.n = n;
  kb.v = v;
  kb.k = IntMatrix(v, n + v);
  // Rows 1..n: e_i | x_i with row_i(b) + x_i . (coefficient rows) = 0.
  // The first n coefficient rows are the identity, so x_i = -row_i(b), padded.
  for (int i = 0; i < n; ++i) {
    kb.k.at(i, i) = 1;
    for (int j = 0; j < n; ++j) kb.k.at(i, n + j) = -u.base.at(i, j);
  }
  auto rels = mesh_relations(*u.dual_atlas);
  for (int r = 0; r < v - n; ++r)
    for (int j = 0; j < v; ++j) kb.k.at(n + r, n + j) = rels[r].coefficients[j];
  if (!kb.k.mul(u.full.mat).is_zero())
    throw std::logic_error("kernel matrix does not annihilate b^univ");
  if (rank(kb.k) != v) throw std::logic_error("kernel matrix is rank-deficient");
  return kb;
}

ReductionLevel::ReductionLevel(RatVector chat_, int n_) : chat(std::move(chat_)), n(n_) {
  if (n < 0 || static_cast<int>(chat.size()) < n)
    throw std::invalid_argument("reduction level: bad split");
  for (size_t i = n; i < chat.size(); ++i)
    if (chat[i] <= 0)
      throw std::invalid_argument("reduction level: trailing entries must be positive");
}

ReductionLevel ReductionLevel::defaults(int n, int v) {
  RatVector chat(v, Rat(1));
  for (int i = 0; i < n; ++i) chat[i] = 0;
  return ReductionLevel(std::move(chat), n);
}

std::string render_equation(const std::vector<std::pair<std::string, Rat>>& terms,
                            const std::string& rhs) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [name, coeff] : terms) {
    if (coeff == 0) continue;
    Rat ac = abs(coeff);
    if (first) {
      if (coeff < 0) s << "-";
      first = false;
    } else {
      s << (coeff < 0 ? " - " : " + ");
    }
    if (ac != 1) s << rat_to_string(ac) << "*";
    s << name;
  }
  if (first) s << "0";
  s << " = " << rhs;
  return s.str();
}

std::vector<std::string> render_slice_equations(const SliceSpec& spec, bool numeric_rhs) {
  std::vector<std::string> out;
  const int v = spec.v();
  for (size_t r = 0; r < spec.slice.equations.size(); ++r) {
    std::vector<std::pair<std::string, Rat>> terms;
    for (int j = 0; j < v; ++j)
      terms.emplace_back("w" + std::to_string(j + 1), spec.slice.equations[r].first[j]);
    std::string rhs = numeric_rhs ? rat_to_string(spec.slice.equations[r].second)
                                  : "c" + std::to_string(spec.n() + r + 1);
    out.push_back(render_equation(terms, rhs));
  }
  return out;
}

MomentImage reduced_moment_image(const UniversalMatrix& u, const KernelBasis& kb,
                                 const ReductionLevel& chat) {
  const int n = kb.n, v = kb.v;
  if (static_cast<int>(chat.chat.size()) != v || chat.n != n)
    throw std::invalid_argument("reduction level does not match the kernel matrix");
  MomentImage img;
  // Render the full system K (u, w) = chat before elimination.
  for (int i = 0; i < v; ++i) {
    std::vector<std::pair<std::string, Rat>> terms;
    for (int j = 0; j < n; ++j)
      terms.emplace_back("u" + std::to_string(j + 1), Rat(kb.k.at(i, j)));
    for (int j = 0; j < v; ++j)
      terms.emplace_back("w" + std::to_string(j + 1), Rat(kb.k.at(i, n + j)));
    img.equations.push_back(render_equation(terms, "c" + std::to_string(i + 1)));
  }
  // The first n rows carry the identity block: they pin u and impose nothing
  // on w, so they are eliminated.  The rest must have a zero u-block.
  for (int i = n; i < v; ++i)
    for (int j = 0; j < n; ++j)
      if (kb.k.at(i, j) != 0)
        throw std::logic_error("kernel matrix is not in the normalized shape");
  img.reduced.ambient_dim = v;
  img.reduced.orthant = true;
  for (int i = n; i < v; ++i) {
    RatVector coeffs(v);
    for (int j = 0; j < v; ++j) coeffs[j] = Rat(kb.k.at(i, n + j));
    img.reduced.equations.emplace_back(std::move(coeffs), chat.chat[i]);
  }
  SliceVertices sv = vertices_of_slice(img.reduced);
  img.status = sv.status;
  img.polytope = sv.polytope;
  return img;
}

Fan theorem_comparison_fan(const Atlas& dual_atlas) {
  return antipodal_fan(g_vector_fan(dual_atlas));
}

TheoremReport verify_theorem(const IntMatrix& b, const ReductionLevel& chat, int cap) {
  TheoremReport rep;
  UniversalMatrix u = universal_extension(b, cap);
  const int n = u.n(), v = u.v();
  if (static_cast<int>(chat.chat.size()) != v)
    throw std::invalid_argument("reduction level has length " +
                                std::to_string(chat.chat.size()) + ", expected " +
                                std::to_string(v));

  KernelBasis kb = kernel_matrix(u);
  MomentImage img = reduced_moment_image(u, kb, chat);
  if (img.status != SliceStatus::ok) {
    rep.detail = img.status == SliceStatus::empty ? "moment image slice is empty"
                                                  : "moment image slice is unbounded";
    return rep;
  }
  rep.from_moment = img.polytope;

  SliceSpec spec = build_slice(b, chat.tail(), cap);
  rep.from_slice = u_polytope(spec);

  rep.vertices_equal = rep.from_moment == rep.from_slice;
  rep.vertex_count = rep.from_slice.vertices.size();
  if (!rep.vertices_equal) {
    rep.detail = "vertex sets differ";
    return rep;
  }

  std::vector<int> coords;
  for (int i = 0; i < n; ++i) coords.push_back(i);
  rep.projection_injective = projection_injective_on_vertices(rep.from_slice, coords);
  VPolytope a = project(rep.from_slice, coords);
  NormalFanResult nf = outer_normal_fan(a);
  if (!nf.full_dimensional) {
    rep.detail = "projected polytope is not full-dimensional";
    return rep;
  }
  FanCompare fc = fans_equal(nf.fan, theorem_comparison_fan(*u.dual_atlas));
  rep.fans_match = fc.equal;
  if (!fc.equal) rep.detail = "normal fan mismatch: " + fc.mismatch;
  return rep;
}

ReductionLevel random_reduction_level(int n, int v, std::mt19937_64& rng) {
  RatVector chat(v);
  for (int i = 0; i < n; ++i)
    chat[i] = Rat(static_cast<long>(rng() % 7) - 3);
  for (int i = n; i < v; ++i) {
    Rat q(static_cast<long>(rng() % 12) + 1, static_cast<long>(rng() % 4) + 1);
    q.canonicalize();
    chat[i] = q;
  }
  return ReductionLevel(std::move(chat), n);
}

std::vector<double> moment_map_eval(const MomentPoint& p) {
  if (p.r.size() != p.theta.size())
    throw std::invalid_argument("moment point: r and theta lengths differ");
  if (p.n < 0 || static_cast<int>(p.r.size()) < p.n)
    throw std::invalid_argument("moment point: bad torus split");
  std::vector<double> out(p.r.size());
  for (size_t j = 0; j < p.r.size(); ++j) {
    if (static_cast<int>(j) < p.n) {
      if (!(p.r[j] > 0))
        throw std::invalid_argument("moment point: torus modulus must be positive");
      out[j] = -std::log(p.r[j]);
    } else {
      if (p.r[j] < 0) throw std::invalid_argument("moment point: negative modulus");
      out[j] = 0.5 * p.r[j] * p.r[j];
    }
  }
  return out;
}

}  // namespace abhy
