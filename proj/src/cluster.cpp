#include "abhy/cluster.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace abhy {

std::optional<std::vector<Int>> is_skew_symmetrizable(const IntMatrix& b) {
  if (b.rows != b.cols) return std::nullopt;
  int n = b.rows;
  for (int i = 0; i < n; ++i) {
    if (b.at(i, i) != 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      bool zi = b.at(i, j) == 0, zj = b.at(j, i) == 0;
      if (zi != zj) return std::nullopt;
      if (!zi && sgn(b.at(i, j)) == sgn(b.at(j, i))) return std::nullopt;
    }
  }
  // Propagate the ratio d_j / d_i = b_ij / (-b_ji) along the nonzero graph.
  std::vector<Rat> d(n, Rat(0));
  std::vector<Int> out(n);
  std::vector<int> comp;
  for (int root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    comp.clear();
    d[root] = 1;
    std::queue<int> q;
    q.push(root);
    comp.push_back(root);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (b.at(i, j) == 0) continue;
        Rat dj = d[i] * Rat(b.at(i, j)) / Rat(-b.at(j, i));
        if (d[j] == 0) {
          d[j] = dj;
          q.push(j);
          comp.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    // scale this component to minimal positive integers
    Int den(1), num(0);
    for (int i : comp) den = lcm(den, d[i].get_den());
    for (int i : comp) num = gcd(num, to_int_exact(Rat(d[i] * den)));
    for (int i : comp) out[i] = to_int_exact(Rat(d[i] * den)) / num;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (out[i] * b.at(i, j) + out[j] * b.at(j, i) != 0) return std::nullopt;
  return out;
}

ExchangeMatrix::ExchangeMatrix(int n_, int m_, IntMatrix mat_)
    : n(n_), m(m_), mat(std::move(mat_)) {
  if (n < 1 || m < 0 || mat.rows != n + m || mat.cols != n)
    throw std::invalid_argument("exchange matrix must be (n+m) x n with n >= 1");
  if (!is_skew_symmetrizable(top()))
    throw std::invalid_argument("mutable block is not skew-symmetrizable");
}

IntMatrix ExchangeMatrix::top() const {
  IntMatrix t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j) = mat.at(i, j);
  return t;
}

namespace {
Int pos_part(const Int& x) { return x > 0 ? x : Int(0); }
Int neg_part(const Int& x) { return x < 0 ? x : Int(0); }
}  // namespace

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  if (k < 0 || k >= b.n) throw std::out_of_range("mutation direction out of range");
  ExchangeMatrix r = b;
  for (int j = 0; j < b.mat.rows; ++j)
    for (int c = 0; c < b.mat.cols; ++c) {
      if (j == k || c == k) {
        r.mat.at(j, c) = -b.mat.at(j, c);
      } else {
        r.mat.at(j, c) = b.mat.at(j, c) +
                         pos_part(b.mat.at(j, k)) * pos_part(b.mat.at(k, c)) -
                         neg_part(b.mat.at(j, k)) * neg_part(b.mat.at(k, c));
      }
    }
  return r;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, const std::vector<int>& word) {
  ExchangeMatrix r = b;
  for (int k : word) r = mutate_matrix(r, k);
  return r;
}

ExchangeMatrix principal_extension(const IntMatrix& b) {
  if (b.rows != b.cols) throw std::invalid_argument("principal_extension: b must be square");
  int n = b.rows;
  IntMatrix mat(2 * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mat.at(i, j) = b.at(i, j);
  for (int i = 0; i < n; ++i) mat.at(n + i, i) = 1;
  return ExchangeMatrix(n, n, std::move(mat));
}

Seed Seed::initial(const ExchangeMatrix& b) {
  Seed s;
  s.matrix = b;
  int total = b.n + b.m;
  s.vars.reserve(total);
  for (int i = 0; i < total; ++i) s.vars.push_back(LaurentPoly::variable(total, i));
  return s;
}

Seed mutate_seed(const Seed& s, int k) {
  const auto& mat = s.matrix.mat;
  if (k < 0 || k >= s.matrix.n) throw std::out_of_range("mutation direction out of range");
  int total = s.matrix.n + s.matrix.m;
  LaurentPoly pos = LaurentPoly::constant(s.vars[0].nvars(), 1);
  LaurentPoly neg = pos;
  for (int r = 0; r < total; ++r) {
    const Int& e = mat.at(r, k);
    if (e > 0) pos = pos * s.vars[r].pow(static_cast<unsigned>(e.get_ui()));
    if (e < 0) neg = neg * s.vars[r].pow(static_cast<unsigned>(Int(-e).get_ui()));
  }
  auto q = (pos + neg).exact_div(s.vars[k]);
  if (!q)
    throw std::logic_error("exchange binomial failed to divide: Laurent phenomenon violated");
  Seed t;
  t.matrix = mutate_matrix(s.matrix, k);
  t.vars = s.vars;
  t.vars[k] = std::move(*q);
  return t;
}

std::vector<std::string> default_var_names(const ExchangeMatrix& b) {
  std::vector<std::string> names;
  names.reserve(b.n + b.m);
  for (int i = 0; i < b.n; ++i) names.push_back("x" + std::to_string(i + 1));
  bool principal = b.m == b.n;
  if (principal)
    for (int i = 0; i < b.n && principal; ++i)
      for (int j = 0; j < b.n; ++j)
        if (b.mat.at(b.n + i, j) != (i == j ? 1 : 0)) {
          principal = false;
          break;
        }
  for (int i = 0; i < b.m; ++i)
    names.push_back((principal ? "y" : "f") + std::to_string(i + 1));
  return names;
}

Int Atlas::cluster_entry(int cluster, int k, int i) const {
  const auto& c = clusters[cluster];
  return c.matrix.at(position_of(cluster, k), position_of(cluster, i));
}

int Atlas::position_of(int cluster, int var) const {
  const auto& mem = clusters[cluster].members;
  for (size_t p = 0; p < mem.size(); ++p)
    if (mem[p] == var) return static_cast<int>(p);
  throw std::invalid_argument("variable not in cluster");
}

Atlas explore(const ExchangeMatrix& b, int cap) {
  if (cap <= 0) throw std::invalid_argument("explore: cap must be positive");
  Atlas atlas;
  atlas.base = b;
  atlas.var_names = default_var_names(b);
  const int n = b.n;

  std::map<LaurentPoly, int> var_id;
  auto intern = [&](const LaurentPoly& p) {
    auto it = var_id.find(p);
    if (it != var_id.end()) return it->second;
    int id = static_cast<int>(atlas.variables.size());
    atlas.variables.push_back(p);
    var_id.emplace(p, id);
    return id;
  };

  Seed init = Seed::initial(b);
  for (int i = 0; i < n; ++i) intern(init.vars[i]);

  std::map<std::vector<int>, int> cluster_id;
  auto add_cluster = [&](const Seed& s) {
    Atlas::Cluster c;
    c.members.resize(n);
    for (int i = 0; i < n; ++i) c.members[i] = var_id.at(s.vars[i]);
    c.matrix = s.matrix.mat;
    c.neighbor.assign(n, -1);
    c.exchanged.assign(n, -1);
    std::vector<int> key = c.members;
    std::sort(key.begin(), key.end());
    int id = static_cast<int>(atlas.clusters.size());
    atlas.clusters.push_back(std::move(c));
    cluster_id.emplace(std::move(key), id);
    return id;
  };
  add_cluster(init);

  // Iterative depth-first walk; each frame owns its seed.
  struct Frame {
    int cluster;
    Seed seed;
    int next_dir = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({0, std::move(init), 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_dir == n) {
      stack.pop_back();
      continue;
    }
    int k = f.next_dir++;
    if (atlas.clusters[f.cluster].neighbor[k] >= 0) continue;  // edge seen from the far side
    Seed t = mutate_seed(f.seed, k);
    int vid = intern(t.vars[k]);
    int ci = f.cluster;
    atlas.clusters[ci].exchanged[k] = vid;
    std::vector<int> key(n);
    for (int i = 0; i < n; ++i) key[i] = var_id.at(t.vars[i]);
    std::sort(key.begin(), key.end());
    auto it = cluster_id.find(key);
    if (it != cluster_id.end()) {
      atlas.clusters[ci].neighbor[k] = it->second;
      // mirror the edge on the far side
      auto& far = atlas.clusters[it->second];
      for (int p = 0; p < n; ++p)
        if (far.members[p] == vid) {
          far.neighbor[p] = ci;
          far.exchanged[p] = atlas.clusters[ci].members[k];
        }
      continue;
    }
    if (static_cast<int>(atlas.clusters.size()) >= cap) throw CapExceeded(cap);
    int cj = add_cluster(t);
    atlas.clusters[ci].neighbor[k] = cj;
    atlas.clusters[cj].neighbor[k] = ci;
    atlas.clusters[cj].exchanged[k] = atlas.clusters[ci].members[k];
    stack.push_back({cj, std::move(t), 0});
  }
  return atlas;
}

namespace {

void require_principal(const Atlas& atlas) {
  const auto& b = atlas.base;
  if (b.m != b.n) throw std::invalid_argument("atlas is not over a principal extension");
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j)
      if (b.mat.at(b.n + i, j) != (i == j ? 1 : 0))
        throw std::invalid_argument("atlas is not over a principal extension");
}

}  // namespace

GVector g_vector(const Atlas& atlas, int var) {
  require_principal(atlas);
  const int n = atlas.n();
  const auto& p = atlas.variables.at(var);
  GVector deg;
  for (const auto& [e, c] : p.terms()) {
    GVector d(n, Int(0));
    for (int i = 0; i < n; ++i) d[i] += e[i];
    for (int j = 0; j < n; ++j)
      if (e[n + j] != 0)
        for (int i = 0; i < n; ++i) d[i] -= e[n + j] * atlas.base.mat.at(i, j);
    if (deg.empty()) {
      deg = std::move(d);
    } else if (deg != d) {
      throw std::logic_error("cluster variable is not homogeneous for the principal grading");
    }
  }
  if (deg.empty()) throw std::logic_error("zero cluster variable");
  return deg;
}

IntMatrix g_vector_matrix(const Atlas& atlas) {
  IntMatrix g(atlas.variable_count(), atlas.n());
  for (int v = 0; v < atlas.variable_count(); ++v) {
    GVector gv = g_vector(atlas, v);
    for (int j = 0; j < atlas.n(); ++j) g.at(v, j) = gv[j];
  }
  return g;
}

LaurentPoly f_polynomial(const Atlas& atlas, int var) {
  require_principal(atlas);
  LaurentPoly f = atlas.variables.at(var).set_first_vars_to_one(atlas.n());
  for (const auto& [e, c] : f.terms())
    for (int x : e)
      if (x < 0)
        throw std::logic_error("F-polynomial has a negative exponent");
  if (f.coeff(LaurentPoly::Exp(f.nvars(), 0)) != 1)
    throw std::logic_error("F-polynomial constant term is not 1");
  return f;
}

}  // namespace abhy
