#pragma once

// Test-only fixtures and independent oracles.  Everything here stays off the
// implementation paths it is used to check.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "abhy/cluster.hpp"
#include "abhy/polytope.hpp"

namespace abhy::testing {

inline IntMatrix b_a1() { return IntMatrix::from_rows({{0}}); }
inline IntMatrix b_a2() { return IntMatrix::from_rows({{0, 1}, {-1, 0}}); }
inline IntMatrix b_b2() { return IntMatrix::from_rows({{0, -1}, {2, 0}}); }
inline IntMatrix b_a3() {
  return IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
}

// Brute-force skew-symmetrizer: smallest positive diagonal with entries <= bound.
inline std::optional<std::vector<long>> brute_force_symmetrizer(const IntMatrix& b,
                                                                long bound) {
  int n = b.rows;
  std::vector<long> d(n, 1);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (d[i] * b.at(i, j) + d[j] * b.at(j, i) != 0) ok = false;
    if (ok) return d;
    int i = n - 1;
    while (i >= 0 && d[i] == bound) d[i--] = 1;
    if (i < 0) return std::nullopt;
    ++d[i];
  }
}

// Rank-2 cluster variables along the exchange chain z_{k+1} z_{k-1} = z_k^e + 1,
// alternating exponents |b21| and |b12|.  Independent of the seed/explore
// machinery; counts the distinct variables of the coefficient-free algebra.
// Finite type only: the chain is periodic, so a fixed step budget saturates.
inline int rank2_chain_variable_count(long b12, long b21, int steps = 24) {
  LaurentPoly z0 = LaurentPoly::variable(2, 0);
  LaurentPoly z1 = LaurentPoly::variable(2, 1);
  std::set<LaurentPoly> seen{z0, z1};
  long e0 = std::abs(b21), e1 = std::abs(b12);
  for (int k = 0; k < steps; ++k) {
    long e = (k % 2 == 0) ? e0 : e1;
    LaurentPoly num = z1.pow(static_cast<unsigned>(e)) + LaurentPoly::constant(2, 1);
    auto z2 = num.exact_div(z0);
    if (!z2) throw std::logic_error("rank-2 oracle: division failed");
    seen.insert(*z2);
    z0 = z1;
    z1 = *z2;
  }
  return static_cast<int>(seen.size());
}

// Half-plane oracle for rank-2 slices: parametrize the equations by the two
// free coordinates with Gaussian elimination, enumerate pairwise line
// intersections of the induced inequalities, and keep the feasible ones.
inline std::vector<RatVector> halfplane_slice_vertices(const HSlice& s) {
  const int v = s.ambient_dim;
  const int e = static_cast<int>(s.equations.size());
  if (v - e != 2) throw std::logic_error("halfplane oracle: not a rank-2 slice");
  // Express w = p + t1 * h1 + t2 * h2 exactly.
  RatMatrix a(e, v);
  RatVector b(e);
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < v; ++j) a.at(i, j) = s.equations[i].first[j];
    b[i] = s.equations[i].second;
  }
  AffineSolution sol = solve_affine(a, b);
  if (!sol.consistent || sol.homogeneous.size() != 2)
    throw std::logic_error("halfplane oracle: unexpected solution family");
  // Each w_j >= 0 becomes p_j + t1 h1_j + t2 h2_j >= 0.
  const RatVector &h1 = sol.homogeneous[0], &h2 = sol.homogeneous[1];
  const RatVector& p = sol.particular;
  std::set<RatVector> verts;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      // solve the 2x2 system: lines i and j active
      Rat det = h1[i] * h2[j] - h1[j] * h2[i];
      if (det == 0) continue;
      Rat t1 = (-p[i] * h2[j] + p[j] * h2[i]) / det;
      Rat t2 = (-h1[i] * p[j] + h1[j] * p[i]) / det;
      RatVector w(v);
      bool ok = true;
      for (int k = 0; k < v; ++k) {
        w[k] = p[k] + t1 * h1[k] + t2 * h2[k];
        if (w[k] < 0) {
          ok = false;
          break;
        }
      }
      if (ok) verts.insert(std::move(w));
    }
  return {verts.begin(), verts.end()};
}

// Deterministic random skew-symmetrizable matrices: fix a diagonal d, then
// b_ij = t * d_j / gcd(d_i, d_j), b_ji = -t * d_i / gcd(d_i, d_j).
template <typename Rng>
IntMatrix random_skew_symmetrizable(int n, Rng& rng) {
  std::vector<long> d(n);
  for (auto& x : d) x = 1 + static_cast<long>(rng() % 3);
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long t = static_cast<long>(rng() % 5) - 2;
      long g = std::gcd(d[i], d[j]);
      b.at(i, j) = t * d[j] / g;
      b.at(j, i) = -t * d[i] / g;
    }
  return b;
}

template <typename Rng>
ExchangeMatrix random_exchange(int n, int m, Rng& rng) {
  IntMatrix top = random_skew_symmetrizable(n, rng);
  IntMatrix mat(n + m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mat.at(i, j) = top.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) mat.at(n + i, j) = static_cast<long>(rng() % 7) - 3;
  return ExchangeMatrix(n, m, std::move(mat));
}

inline RatVector rat_vec(const std::vector<long>& v) {
  RatVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

}  // namespace abhy::testing
