#include "abhy/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abhy {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rws) {
  int r = static_cast<int>(rws.size());
  int c = r == 0 ? 0 : static_cast<int>(rws[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rws[i].size()) != c)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rws[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(int i) const {
  return std::vector<Int>(a.begin() + static_cast<size_t>(i) * cols,
                          a.begin() + static_cast<size_t>(i + 1) * cols);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("mul: dimension mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

std::string IntMatrix::to_string() const {
  std::ostringstream s;
  for (int i = 0; i < rows; ++i) {
    s << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols; ++j) s << (j ? " " : "[") << at(i, j).get_str();
    s << "]" << (i + 1 == rows ? "]" : "\n");
  }
  if (rows == 0) s << "[]";
  return s.str();
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows, m.cols) {
  for (size_t i = 0; i < m.a.size(); ++i) a[i] = Rat(m.a[i]);
}

RatVector RatMatrix::row(int i) const {
  return RatVector(a.begin() + static_cast<size_t>(i) * cols,
                   a.begin() + static_cast<size_t>(i + 1) * cols);
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

// row i -= q * row r
void row_axpy(IntMatrix& m, int i, int r, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(r, c);
}

void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  HnfResult res;
  res.h = m;
  res.u = IntMatrix::identity(m.rows);
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;

  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    // Euclidean reduction in this column until a single nonzero remains at row r.
    while (true) {
      int best = -1;
      for (int i = r; i < m.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best < 0 || cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0) best = i;
      }
      if (best < 0) break;  // column clear below r
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool others = false;
      for (int i = r + 1; i < m.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        others = true;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
      }
      if (!others) break;
    }
    if (h.at(r, col) == 0) continue;
    if (h.at(r, col) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

int rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

IntMatrix left_kernel_basis(const IntMatrix& m) {
  HnfResult f = hermite_normal_form(m);
  int k = m.rows - f.rank;
  IntMatrix basis(k, m.rows);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m.rows; ++j) basis.at(i, j) = f.u.at(f.rank + i, j);
  // canonicalize
  HnfResult g = hermite_normal_form(basis);
  if (g.rank != k) throw std::logic_error("left_kernel_basis: dependent kernel rows");
  return g.h;
}

namespace {

// Gauss-Jordan into RREF; returns pivot column per pivot row.
std::vector<int> rref_in_place(RatMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r, c), m.at(p, c));
    Rat inv = 1 / m.at(r, col);
    for (int c = 0; c < m.cols; ++c) m.at(r, c) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int c = 0; c < m.cols; ++c) m.at(i, c) -= f * m.at(r, c);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const RatMatrix& m) {
  RatMatrix w = m;
  return static_cast<int>(rref_in_place(w).size());
}

RatMatrix rref(const RatMatrix& m) {
  RatMatrix w = m;
  auto pivots = rref_in_place(w);
  RatMatrix out(static_cast<int>(pivots.size()), m.cols);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = w.at(i, j);
  return out;
}

bool same_row_span(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols != b.cols) return false;
  return rref(a) == rref(b);
}

AffineSolution solve_affine(const RatMatrix& a, const RatVector& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw std::invalid_argument("solve_affine: rhs length mismatch");
  RatMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  auto pivots = rref_in_place(aug);
  AffineSolution sol;
  for (int p : pivots)
    if (p == a.cols) return sol;  // pivot in the rhs column: inconsistent
  sol.consistent = true;
  sol.particular.assign(a.cols, Rat(0));
  std::vector<bool> is_pivot(a.cols, false);
  for (size_t i = 0; i < pivots.size(); ++i) {
    is_pivot[pivots[i]] = true;
    sol.particular[pivots[i]] = aug.at(static_cast<int>(i), a.cols);
  }
  for (int f = 0; f < a.cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector h(a.cols, Rat(0));
    h[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      h[pivots[i]] = -aug.at(static_cast<int>(i), f);
    // scale to primitive integers, first nonzero positive
    Int den(1);
    for (const Rat& q : h) den = lcm(den, q.get_den());
    std::vector<Int> ints;
    ints.reserve(h.size());
    for (const Rat& q : h) ints.push_back(to_int_exact(Rat(q * den)));
    ints = primitive(ints);
    int fz = -1;
    for (size_t i = 0; i < ints.size(); ++i)
      if (ints[i] != 0) {
        fz = static_cast<int>(i);
        break;
      }
    if (fz >= 0 && ints[fz] < 0)
      for (auto& x : ints) x = -x;
    RatVector out(h.size());
    for (size_t i = 0; i < ints.size(); ++i) out[i] = Rat(ints[i]);
    sol.homogeneous.push_back(std::move(out));
  }
  return sol;
}

std::vector<Int> primitive(const std::vector<Int>& v) {
  Int g(0);
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  std::vector<Int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  if (q.get_den() <= 0) throw std::invalid_argument("bad rational: " + s);
  return q;
}

Int to_int_exact(const Rat& q) {
  if (q.get_den() != 1) throw std::logic_error("rational is not an integer: " + rat_to_string(q));
  return q.get_num();
}

}  // namespace abhy
