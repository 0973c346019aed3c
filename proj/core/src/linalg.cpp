#include "hgc/linalg.hpp"

#include <istream>
#include <ostream>
#include <utility>

namespace hgc {

Elem dot(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Elem s = 0;
  for (int i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Vec scale(const Field& f, Elem a, const Vec& v) {
  Vec r(v.size());
  for (int i = 0; i < v.size(); ++i) r[i] = f.mul(a, v[i]);
  return r;
}

Vec add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  Vec r(a.size());
  for (int i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  Vec r(a.size());
  for (int i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec conj(const Field& f, const Vec& v) {
  Vec r(v.size());
  for (int i = 0; i < v.size(); ++i) r[i] = f.frob(v[i]);
  return r;
}

Vec normalize(const Field& f, const Vec& v) {
  const int l = v.lead();
  if (l < 0) return v;
  return scale(f, f.inv(v[l]), v);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vec> rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::col_vec(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (Elem x : a_)
    if (x) return false;
  return true;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < b.cols(); ++j) p(i, j) = f.add(p(i, j), f.mul(x, b(k, j)));
    }
  return p;
}

Vec apply(const Field& f, const Matrix& m, const Vec& x) {
  if (m.cols() != x.size()) throw std::invalid_argument("apply: shape mismatch");
  Vec y(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Elem s = 0;
    for (int j = 0; j < m.cols(); ++j) s = f.add(s, f.mul(m(i, j), x[j]));
    y[i] = s;
  }
  return y;
}

Matrix conj(const Field& f, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = f.frob(m(i, j));
  return r;
}

RrefResult rref(const Field& f, Matrix m) {
  RrefResult res;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem s = f.inv(m(r, c));
    for (int j = c; j < m.cols(); ++j) m(r, j) = f.mul(s, m(r, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem x = m(i, c);
      if (!x) continue;
      for (int j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(x, m(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

int rank(const Field& f, const Matrix& m) {
  // Wide matrices go column by column through the incremental basis.
  if (m.cols() > 4 * m.rows() && m.rows() > 0) {
    EchelonBuilder eb(f, m.rows());
    std::vector<Elem> col(m.rows());
    for (int c = 0; c < m.cols() && eb.rank() < m.rows(); ++c) {
      for (int r = 0; r < m.rows(); ++r) col[r] = m(r, c);
      eb.insert(std::span<const Elem>(col));
    }
    return eb.rank();
  }
  return rref(f, m).rank;
}

Subspace Subspace::span(const Field& f, const Matrix& m) {
  auto res = rref(f, m);
  Matrix b(res.rank, m.cols());
  for (int r = 0; r < res.rank; ++r)
    for (int c = 0; c < m.cols(); ++c) b(r, c) = res.reduced(r, c);
  return Subspace(std::move(b));
}

Subspace Subspace::span(const Field& f, std::span<const Vec> vs, int ambient) {
  return span(f, Matrix::from_rows(vs, ambient));
}

bool Subspace::contains(const Field& f, const Vec& v) const { return solve_membership(f, *this, v); }

Subspace kernel(const Field& f, const Matrix& m) {
  auto res = rref(f, m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : res.pivots) is_pivot[c] = true;
  Matrix k(n - res.rank, n);
  int row = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(row, free) = 1;
    for (int r = 0; r < res.rank; ++r) k(row, res.pivots[r]) = f.neg(res.reduced(r, free));
    ++row;
  }
  return Subspace::span(f, k);
}

bool solve_membership(const Field& f, const Subspace& w, const Vec& v) {
  if (v.size() != w.ambient()) throw std::invalid_argument("solve_membership: dimension mismatch");
  // Eliminate v against the RREF basis; v is in the span iff the residual vanishes.
  Vec r = v;
  const Matrix& b = w.basis();
  for (int i = 0; i < b.rows(); ++i) {
    int lead = 0;
    while (!b(i, lead)) ++lead;
    const Elem x = r[lead];
    if (!x) continue;
    for (int c = 0; c < b.cols(); ++c) r[c] = f.sub(r[c], f.mul(x, b(i, c)));
  }
  return r.is_zero();
}

Subspace intersect(const Field& f, const Subspace& a, const Subspace& b) {
  // Solve x·A = y·B via the kernel of [A; -B]ᵀ.
  const int n = a.ambient();
  if (b.ambient() != n) throw std::invalid_argument("intersect: ambient mismatch");
  Matrix st(n, a.dim() + b.dim());
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < a.dim(); ++i) st(c, i) = a.basis()(i, c);
    for (int j = 0; j < b.dim(); ++j) st(c, a.dim() + j) = f.neg(b.basis()(j, c));
  }
  Subspace k = kernel(f, st);
  std::vector<Vec> out;
  for (int r = 0; r < k.dim(); ++r) {
    Vec x(n);
    for (int i = 0; i < a.dim(); ++i) {
      const Elem coef = k.basis()(r, i);
      for (int c = 0; c < n; ++c) x[c] = f.add(x[c], f.mul(coef, a.basis()(i, c)));
    }
    out.push_back(x);
  }
  return Subspace::span(f, out, n);
}

bool EchelonBuilder::insert(Vec v) { return insert(v.span()); }

bool EchelonBuilder::insert(std::span<const Elem> v) {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("EchelonBuilder: length mismatch");
  std::vector<Elem> r(v.begin(), v.end());
  for (int c = 0; c < n_; ++c) {
    if (!r[c]) continue;
    const int pr = pivot_row_[c];
    if (pr < 0) {
      const Elem s = f_.inv(r[c]);
      for (auto& x : r) x = f_.mul(s, x);
      pivot_row_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(r));
      return true;
    }
    const Elem x = r[c];
    const auto& b = rows_[pr];
    for (int j = c; j < n_; ++j) r[j] = f_.sub(r[j], f_.mul(x, b[j]));
  }
  return false;
}

void write_matrix(std::ostream& os, const Matrix& m, int q2) {
  os << m.rows() << ' ' << m.cols() << ' ' << q2 << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << static_cast<int>(m(r, c));
    os << '\n';
  }
}

Matrix read_matrix(std::istream& is, int expected_q2) {
  int rows = 0, cols = 0, q2 = 0;
  if (!(is >> rows >> cols >> q2)) throw std::runtime_error("matrix: malformed header");
  if (rows < 0 || cols < 0) throw std::runtime_error("matrix: negative size");
  if (expected_q2 > 0 && q2 != expected_q2) throw std::runtime_error("matrix: field size mismatch");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int x = 0;
      if (!(is >> x)) throw std::runtime_error("matrix: truncated entries");
      if (x < 0 || x >= q2) throw std::runtime_error("matrix: entry out of field range");
      m(r, c) = static_cast<Elem>(x);
    }
  return m;
}

}  // namespace hgc
