#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace abhy {

using Int = mpz_class;
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

/// Dense row-major integer matrix with arbitrary-precision entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rws);

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  std::vector<Int> row(int i) const;
  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& o) const;
  bool is_zero() const;

  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  std::string to_string() const;
};

/// Dense row-major rational matrix.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  explicit RatMatrix(const IntMatrix& m);

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  RatVector row(int i) const;

  bool operator==(const RatMatrix& o) const;
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }
};

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
  int rank = 0;
};

/// Row-style HNF: pivots positive and strictly right-moving, entries above a
/// pivot reduced into [0, pivot), zero rows at the bottom.  Deterministic.
HnfResult hermite_normal_form(const IntMatrix& m);

int rank(const IntMatrix& m);
int rank(const RatMatrix& m);

/// Rows form a basis of the lattice {x : x * m == 0}, canonicalized by a
/// second HNF pass so equal kernels give identical matrices.
IntMatrix left_kernel_basis(const IntMatrix& m);

struct AffineSolution {
  bool consistent = false;
  RatVector particular;                 // free variables set to 0
  std::vector<RatVector> homogeneous;   // primitive integer, first nonzero > 0
};

/// Solve a * x == b over the rationals.  Inconsistency is a value, not an error.
AffineSolution solve_affine(const RatMatrix& a, const RatVector& b);

/// Reduced row echelon form with zero rows dropped; canonical for row span.
RatMatrix rref(const RatMatrix& m);
bool same_row_span(const RatMatrix& a, const RatMatrix& b);

/// Divide by the gcd of the entries, keeping orientation.  Zero vector stays zero.
std::vector<Int> primitive(const std::vector<Int>& v);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

/// Integer value of a rational known to have denominator 1.
Int to_int_exact(const Rat& q);

}  // namespace abhy
