#pragma once

#include <memory>
#include <string>
#include <vector>

#include "abhy/cluster.hpp"

namespace abhy {

/// Transpose of b.  The dual exchange matrix is skew-symmetrizable whenever
/// b is, and mutation commutes with taking duals.
IntMatrix dual_matrix(const IntMatrix& b);

/// b stacked on the g-vectors of the dual algebra, in atlas numbering.
struct UniversalMatrix {
  IntMatrix base;        // n x n
  IntMatrix coeff_rows;  // v x n, the dual g-vectors
  ExchangeMatrix full;   // (n+v) x n
  std::shared_ptr<const Atlas> dual_atlas;  // atlas of (b^T)^prin

  int n() const { return base.rows; }
  int v() const { return coeff_rows.rows; }
};

UniversalMatrix universal_extension(const IntMatrix& b, int cap = kDefaultCap);

struct MeshPartner {
  int partner;          // variable id j
  int witness_cluster;  // first atlas cluster certifying positivity
};

/// The unique positive mesh exchange partner of variable i: mutating the
/// witness cluster at i yields j while the column of i in the witness matrix
/// is nonnegative.  Defined for every i, including initial ones.
MeshPartner positive_mesh_partner(const Atlas& atlas, int i);

/// The g-vector relation attached to a non-initial variable i:
/// g_i + g_j - sum_{k in C} b(C)_{ki} g_k = 0.
struct MeshRelation {
  int index;                      // i, non-initial
  int partner;                    // j
  std::vector<int> witness;       // members of the witness cluster C
  std::vector<Int> coefficients;  // length v; annihilates the g-vector matrix
};

/// One relation per non-initial variable.  Verifies that each relation
/// annihilates the g-vectors and that together they span all dependencies.
std::vector<MeshRelation> mesh_relations(const Atlas& atlas);

struct UnivCompatReport {
  bool pass = false;
  bool rows_match_under_bijection = false;
  bool rows_match_as_multiset = false;
  IntMatrix mutated_rows;     // coefficient rows of mu_w(b^univ)
  IntMatrix recomputed_rows;  // g-vectors of the dual of mu_w(b), own numbering
  std::vector<int> bijection; // original variable id -> id in the new atlas
  std::string detail;
};

/// Checks mu_w(b^univ) == mu_w(b)^univ.  The coefficient rows of the mutated
/// matrix must equal the freshly computed dual g-vectors under the canonical
/// bijection, which is realized by tracking each dual cluster variable as a
/// polynomial through the mutation word.
UnivCompatReport check_univ_compatibility(const IntMatrix& b,
                                          const std::vector<int>& word,
                                          int cap = kDefaultCap);

}  // namespace abhy
