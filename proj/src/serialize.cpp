#include "abhy/serialize.hpp"

#include <gmpxx.h>

#include <sstream>

namespace abhy {

namespace {

long field_int(const Json& j, const char* name) {
  if (!j.contains(name)) throw DocumentError(std::string("missing field \"") + name + "\"");
  if (!j[name].is_number_integer())
    throw DocumentError(std::string("field \"") + name + "\" must be an integer");
  return j[name].get<long>();
}

}  // namespace

Json matrix_to_json(const ExchangeMatrix& b) {
  Json j;
  j["n"] = b.n;
  j["m"] = b.m;
  Json rows = Json::array();
  for (int i = 0; i < b.mat.rows; ++i) {
    Json r = Json::array();
    for (int c = 0; c < b.mat.cols; ++c) {
      if (!b.mat.at(i, c).fits_slong_p())
        throw DocumentError("matrix entry too large for the JSON document");
      r.push_back(b.mat.at(i, c).get_si());
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

ExchangeMatrix matrix_from_json(const Json& j) {
  long n = field_int(j, "n");
  long m = field_int(j, "m");
  if (n < 1) throw DocumentError("field \"n\" must be at least 1");
  if (m < 0) throw DocumentError("field \"m\" must be nonnegative");
  if (!j.contains("rows") || !j["rows"].is_array())
    throw DocumentError("missing field \"rows\"");
  const auto& rows = j["rows"];
  if (static_cast<long>(rows.size()) != n + m)
    throw DocumentError("field \"rows\" must have n + m entries");
  IntMatrix mat(static_cast<int>(n + m), static_cast<int>(n));
  for (long i = 0; i < n + m; ++i) {
    if (!rows[i].is_array() || static_cast<long>(rows[i].size()) != n)
      throw DocumentError("field \"rows\" must contain arrays of length n");
    for (long c = 0; c < n; ++c) {
      if (!rows[i][c].is_number_integer())
        throw DocumentError("field \"rows\" must contain integers");
      mat.at(static_cast<int>(i), static_cast<int>(c)) = rows[i][c].get<long>();
    }
  }
  try {
    return ExchangeMatrix(static_cast<int>(n), static_cast<int>(m), std::move(mat));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

Json polytope_to_json(const VPolytope& p, const std::vector<std::vector<int>>* labels) {
  Json j;
  j["ambientDim"] = p.ambient_dim;
  Json verts = Json::array();
  for (const auto& v : p.vertices) {
    Json row = Json::array();
    for (const auto& q : v) row.push_back(rat_to_string(q));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  if (labels) {
    Json ls = Json::array();
    for (const auto& l : *labels) {
      Json row = Json::array();
      for (int x : l) row.push_back(x + 1);  // documents use 1-based indices
      ls.push_back(std::move(row));
    }
    j["labels"] = std::move(ls);
  }
  return j;
}

VPolytope polytope_from_json(const Json& j) {
  long dim = field_int(j, "ambientDim");
  if (dim < 0) throw DocumentError("field \"ambientDim\" must be nonnegative");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw DocumentError("missing field \"vertices\"");
  VPolytope p;
  p.ambient_dim = static_cast<int>(dim);
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || static_cast<long>(row.size()) != dim)
      throw DocumentError("field \"vertices\" must contain arrays of length ambientDim");
    RatVector v;
    v.reserve(row.size());
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw DocumentError("field \"vertices\" must contain rational strings");
      try {
        v.push_back(rat_from_string(cell.get<std::string>()));
      } catch (const std::invalid_argument&) {
        throw DocumentError("field \"vertices\" holds an unparsable rational");
      }
    }
    p.vertices.push_back(std::move(v));
  }
  if (!std::is_sorted(p.vertices.begin(), p.vertices.end()))
    throw DocumentError("field \"vertices\" must be lexicographically sorted");
  return p;
}

Json atlas_to_json(const Atlas& a) {
  Json j;
  j["n"] = a.n();
  j["m"] = a.m();
  j["variableCount"] = a.variable_count();
  j["clusterCount"] = a.cluster_count();
  Json vars = Json::array();
  for (const auto& p : a.variables) vars.push_back(p.to_string(a.var_names));
  j["variables"] = std::move(vars);
  Json clusters = Json::array();
  Json adjacency = Json::array();
  for (const auto& cl : a.clusters) {
    Json mem = Json::array();
    for (int v : cl.members) mem.push_back(v + 1);
    clusters.push_back(std::move(mem));
    Json adj = Json::array();
    for (int c : cl.neighbor) adj.push_back(c + 1);
    adjacency.push_back(std::move(adj));
  }
  j["clusters"] = std::move(clusters);
  j["adjacency"] = std::move(adjacency);
  return j;
}

std::string polytope_to_off(const VPolytope& p, int precision) {
  std::ostringstream s;
  s << "OFF\n" << p.vertices.size() << " 0 0\n";
  s.precision(precision);
  s << std::fixed;
  for (const auto& v : p.vertices) {
    for (size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i].get_d();
    s << "\n";
  }
  return s.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace abhy
