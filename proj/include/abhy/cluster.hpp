#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abhy/laurent.hpp"
#include "abhy/matrix.hpp"

namespace abhy {

inline constexpr int kDefaultCap = 10000;

/// Thrown when exploration would exceed its cluster cap (possibly infinite type).
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(int cap)
      : std::runtime_error("exploration cap of " + std::to_string(cap) +
                           " clusters exceeded; raise the cap or abort") {}
};

/// Returns the minimal positive integer diagonal d with diag(d) * b
/// skew-symmetric, or nullopt if b is not skew-symmetrizable.
std::optional<std::vector<Int>> is_skew_symmetrizable(const IntMatrix& b);

/// An (n+m) x n exchange matrix: n mutable directions, m frozen rows.
/// The top n x n block is verified skew-symmetrizable at construction.
struct ExchangeMatrix {
  int n = 0;
  int m = 0;
  IntMatrix mat;

  ExchangeMatrix() = default;
  ExchangeMatrix(int n_, int m_, IntMatrix mat_);

  IntMatrix top() const;  // the mutable n x n block
};

/// Matrix mutation in direction k (0-based, k < n).
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, const std::vector<int>& word);

/// b extended by an identity block of frozen rows.
ExchangeMatrix principal_extension(const IntMatrix& b);

/// A labelled vertex of the mutation tree: matrix plus the n+m variables,
/// written as Laurent polynomials in the initial data.  The last m entries
/// are the frozen indeterminates themselves and never change.
struct Seed {
  ExchangeMatrix matrix;
  std::vector<LaurentPoly> vars;

  static Seed initial(const ExchangeMatrix& b);
};

Seed mutate_seed(const Seed& s, int k);

/// Default variable names: x1..xn for the mutable directions and, when the
/// frozen block is the identity, y1..yn; otherwise generic frozen names.
std::vector<std::string> default_var_names(const ExchangeMatrix& b);

/// The fully explored exchange graph of a finite-type seed.
struct Atlas {
  struct Cluster {
    std::vector<int> members;    // variable ids by seed position
    IntMatrix matrix;            // full (n+m) x n seed matrix at this cluster
    std::vector<int> neighbor;   // per position: adjacent cluster index
    std::vector<int> exchanged;  // per position: variable id obtained by mutating there
  };

  ExchangeMatrix base;
  std::vector<std::string> var_names;    // names of the n+m initial indeterminates
  std::vector<LaurentPoly> variables;    // all cluster variables; 0..n-1 initial
  std::vector<Cluster> clusters;         // 0 = initial; discovery order

  int n() const { return base.n; }
  int m() const { return base.m; }
  int variable_count() const { return static_cast<int>(variables.size()); }
  int cluster_count() const { return static_cast<int>(clusters.size()); }

  /// Entry b_{ki} of the cluster's mutable block, rows and columns indexed
  /// by the member variable ids k, i.
  Int cluster_entry(int cluster, int k, int i) const;
  int position_of(int cluster, int var) const;
};

/// Exhaustive depth-first exploration from the initial seed, trying mutation
/// directions in ascending order.  Clusters are deduplicated by the unordered
/// set of their cluster variables; variable ids follow first-discovery order
/// so rank-2 examples come out in mutation-chain order.
Atlas explore(const ExchangeMatrix& b, int cap = kDefaultCap);

using GVector = std::vector<Int>;

/// Degree of a cluster variable under the principal grading
/// deg(x_i) = e_i, deg(y_j) = -(column j of b).  The atlas must have been
/// built from principal_extension(b); inhomogeneity is a fatal bug.
GVector g_vector(const Atlas& atlas, int var);

/// All g-vectors, as a v x n matrix in atlas numbering.
IntMatrix g_vector_matrix(const Atlas& atlas);

/// Cluster variable with the x's set to 1: a polynomial in y with
/// nonnegative exponents and constant term 1.
LaurentPoly f_polynomial(const Atlas& atlas, int var);

}  // namespace abhy
