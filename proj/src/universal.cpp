#include "abhy/universal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace abhy {

IntMatrix dual_matrix(const IntMatrix& b) {
  if (b.rows != b.cols) throw std::invalid_argument("dual_matrix: b must be square");
  return b.transpose();
}

UniversalMatrix universal_extension(const IntMatrix& b, int cap) {
  UniversalMatrix u;
  u.base = b;
  auto atlas = std::make_shared<Atlas>(explore(principal_extension(dual_matrix(b)), cap));
  u.dual_atlas = atlas;
  u.coeff_rows = g_vector_matrix(*atlas);
  const int n = b.rows, v = u.coeff_rows.rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (u.coeff_rows.at(i, j) != (i == j ? 1 : 0))
        throw std::logic_error("initial dual g-vectors are not the identity rows");
  IntMatrix full(n + v, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) full.at(i, j) = b.at(i, j);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < n; ++j) full.at(n + i, j) = u.coeff_rows.at(i, j);
  u.full = ExchangeMatrix(n, v, std::move(full));
  return u;
}

MeshPartner positive_mesh_partner(const Atlas& atlas, int i) {
  const int n = atlas.n();
  for (int c = 0; c < atlas.cluster_count(); ++c) {
    const auto& cl = atlas.clusters[c];
    auto it = std::find(cl.members.begin(), cl.members.end(), i);
    if (it == cl.members.end()) continue;
    int pos = static_cast<int>(it - cl.members.begin());
    bool nonneg = true;
    for (int p = 0; p < n; ++p)
      if (cl.matrix.at(p, pos) < 0) {
        nonneg = false;
        break;
      }
    if (nonneg) return {cl.exchanged[pos], c};
  }
  throw std::logic_error("no positive mesh witness found for variable " +
                         std::to_string(i + 1));
}

std::vector<MeshRelation> mesh_relations(const Atlas& atlas) {
  const int n = atlas.n(), v = atlas.variable_count();
  IntMatrix g = g_vector_matrix(atlas);
  std::vector<MeshRelation> rels;
  rels.reserve(v - n);
  for (int i = n; i < v; ++i) {
    MeshPartner mp = positive_mesh_partner(atlas, i);
    const auto& cl = atlas.clusters[mp.witness_cluster];
    MeshRelation r;
    r.index = i;
    r.partner = mp.partner;
    r.witness = cl.members;
    r.coefficients.assign(v, Int(0));
    r.coefficients[i] += 1;
    r.coefficients[mp.partner] += 1;
    for (int k : cl.members)
      if (k != i) r.coefficients[k] -= atlas.cluster_entry(mp.witness_cluster, k, i);
    for (int j = 0; j < n; ++j) {
      Int s(0);
      for (int k = 0; k < v; ++k) s += r.coefficients[k] * g.at(k, j);
      if (s != 0) throw std::logic_error("mesh relation does not annihilate the g-vectors");
    }
    rels.push_back(std::move(r));
  }
  IntMatrix rel_mat(v - n, v);
  for (int i = 0; i < v - n; ++i)
    for (int j = 0; j < v; ++j) rel_mat.at(i, j) = rels[i].coefficients[j];
  if (rank(rel_mat) != v - n)
    throw std::logic_error("mesh relations do not span the dependency space");
  return rels;
}

namespace {

// Coefficient-free shadows of the atlas variables (frozen variables set to 1).
// Distinctness is asserted: collapsing here would break the tracking bijection.
std::vector<LaurentPoly> shadows(const Atlas& atlas) {
  std::vector<LaurentPoly> out;
  out.reserve(atlas.variable_count());
  std::map<LaurentPoly, int> seen;
  for (int i = 0; i < atlas.variable_count(); ++i) {
    LaurentPoly sh(atlas.n());
    for (const auto& [e, c] : atlas.variables[i].terms()) {
      LaurentPoly::Exp cut(e.begin(), e.begin() + atlas.n());
      sh += LaurentPoly::monomial(std::move(cut), c);
    }
    if (!seen.emplace(sh, i).second)
      throw std::logic_error("distinct cluster variables collide after freezing coefficients");
    out.push_back(std::move(sh));
  }
  return out;
}

}  // namespace

UnivCompatReport check_univ_compatibility(const IntMatrix& b,
                                          const std::vector<int>& word,
                                          int cap) {
  UnivCompatReport rep;
  UniversalMatrix u = universal_extension(b, cap);
  const int n = u.n(), v = u.v();

  ExchangeMatrix mut = mutate_matrix(u.full, word);
  rep.mutated_rows = IntMatrix(v, n);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < n; ++j) rep.mutated_rows.at(i, j) = mut.mat.at(n + i, j);

  // Recompute from scratch: the dual algebra of mu_w(b), with its own seed.
  IntMatrix b2 = b;
  {
    ExchangeMatrix eb(b.rows, 0, b);
    eb = mutate_matrix(eb, word);
    b2 = eb.top();
  }
  Atlas fresh = explore(principal_extension(dual_matrix(b2)), cap);
  rep.recomputed_rows = g_vector_matrix(fresh);
  if (fresh.variable_count() != v) {
    rep.detail = "dual atlases disagree on variable count";
    return rep;
  }

  // Canonical bijection: push the coefficient-free dual seed through the word,
  // then express each fresh variable in the original initial data.
  const Atlas& orig = *u.dual_atlas;
  std::vector<LaurentPoly> zeta = shadows(orig);
  std::map<LaurentPoly, int> zeta_id;
  for (int i = 0; i < v; ++i) zeta_id.emplace(zeta[i], i);

  Seed s = Seed::initial(ExchangeMatrix(n, 0, dual_matrix(b)));
  for (int k : word) s = mutate_seed(s, k);
  std::vector<LaurentPoly> images;
  images.reserve(n);
  for (int p = 0; p < n; ++p) {
    if (!zeta_id.count(s.vars[p]))
      throw std::logic_error("mutated dual seed left the explored atlas");
    images.push_back(s.vars[p]);
  }

  std::vector<LaurentPoly> fresh_shadows = shadows(fresh);
  rep.bijection.assign(v, -1);
  std::vector<int> inverse(v, -1);
  for (int j = 0; j < v; ++j) {
    auto tracked = fresh_shadows[j].substitute(images);
    if (!tracked) throw std::logic_error("variable tracking left the Laurent ring");
    auto it = zeta_id.find(*tracked);
    if (it == zeta_id.end()) {
      rep.detail = "tracked variable not found in the original atlas";
      return rep;
    }
    if (inverse[it->second] != -1) {
      rep.detail = "variable tracking is not injective";
      return rep;
    }
    inverse[it->second] = j;
    rep.bijection[it->second] = j;
  }

  rep.rows_match_under_bijection = true;
  for (int i = 0; i < v && rep.rows_match_under_bijection; ++i)
    for (int j = 0; j < n; ++j)
      if (rep.mutated_rows.at(i, j) != rep.recomputed_rows.at(rep.bijection[i], j)) {
        rep.rows_match_under_bijection = false;
        std::ostringstream os;
        os << "row " << i + 1 << " differs from the g-vector of its tracked variable";
        rep.detail = os.str();
        break;
      }

  auto sorted_rows = [](const IntMatrix& m) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(m.rows);
    for (int i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  rep.rows_match_as_multiset =
      sorted_rows(rep.mutated_rows) == sorted_rows(rep.recomputed_rows);

  rep.pass = rep.rows_match_under_bijection && rep.rows_match_as_multiset;
  return rep;
}

}  // namespace abhy
