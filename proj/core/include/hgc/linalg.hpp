#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgc/field.hpp"

namespace hgc {

/// Largest ambient dimension handled by the enumeration code.
inline constexpr int kMaxDim = 16;

/// Vector of length <= kMaxDim over GF(q²), stored inline.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int n) : n_(static_cast<std::uint8_t>(check(n))) {}
  Vec(std::initializer_list<Elem> xs) : n_(static_cast<std::uint8_t>(check(static_cast<int>(xs.size())))) {
    std::size_t i = 0;
    for (Elem x : xs) e_[i++] = x;
  }
  static Vec from(std::span<const Elem> xs) {
    Vec v(static_cast<int>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) v.e_[i] = xs[i];
    return v;
  }
  static Vec unit(int n, int i) {
    Vec v(n);
    v.e_[i] = 1;
    return v;
  }

  int size() const { return n_; }
  Elem& operator[](int i) { return e_[i]; }
  Elem operator[](int i) const { return e_[i]; }
  const Elem* begin() const { return e_.data(); }
  const Elem* end() const { return e_.data() + n_; }
  Elem* begin() { return e_.data(); }
  Elem* end() { return e_.data() + n_; }
  std::span<const Elem> span() const { return {e_.data(), n_}; }

  bool is_zero() const {
    for (int i = 0; i < n_; ++i)
      if (e_[i]) return false;
    return true;
  }
  /// Index of the first nonzero entry, or -1.
  int lead() const {
    for (int i = 0; i < n_; ++i)
      if (e_[i]) return i;
    return -1;
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  /// Lexicographic on the integer encodings.
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
    const int n = a.n_ < b.n_ ? a.n_ : b.n_;
    for (int i = 0; i < n; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    return a.n_ <=> b.n_;
  }

 private:
  static int check(int n) {
    if (n < 0 || n > kMaxDim) throw std::invalid_argument("vector length out of range");
    return n;
  }
  std::array<Elem, kMaxDim> e_{};
  std::uint8_t n_ = 0;
};

// Vector helpers over a field.
Elem dot(const Field& f, const Vec& a, const Vec& b);
Vec scale(const Field& f, Elem a, const Vec& v);
Vec add(const Field& f, const Vec& a, const Vec& b);
Vec sub(const Field& f, const Vec& a, const Vec& b);
/// Entrywise x -> x^q.
Vec conj(const Field& f, const Vec& v);
/// Scales v so that its first nonzero entry is 1.  Zero stays zero.
Vec normalize(const Field& f, const Vec& v);

/// Dense row-major matrix over GF(q²).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }
  static Matrix identity(int n);
  static Matrix from_rows(std::span<const Vec> rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<Elem> row(int r) { return {a_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Elem> row(int r) const {
    return {a_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  Vec row_vec(int r) const { return Vec::from(row(r)); }
  Vec col_vec(int c) const;
  std::span<const Elem> data() const { return a_; }

  bool is_zero() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Vec apply(const Field& f, const Matrix& m, const Vec& x);
/// Entrywise x -> x^q.
Matrix conj(const Field& f, const Matrix& m);

struct RrefResult {
  Matrix reduced;           ///< same shape as the input, zero rows last
  int rank = 0;
  std::vector<int> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form; pivots chosen leftmost first.
RrefResult rref(const Field& f, Matrix m);
int rank(const Field& f, const Matrix& m);

/// Subspace of GF(q²)^n kept as its RREF basis, which is unique per subspace.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the rows of m.
  static Subspace span(const Field& f, const Matrix& m);
  static Subspace span(const Field& f, std::span<const Vec> vs, int ambient);
  static Subspace zero(int ambient) { return Subspace(Matrix(0, ambient)); }
  static Subspace full(int ambient) { return Subspace(Matrix::identity(ambient)); }

  int dim() const { return basis_.rows(); }
  int ambient() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Vec vector(int i) const { return basis_.row_vec(i); }
  /// Canonical key: the concatenated RREF entries.
  std::vector<Elem> key() const { return {basis_.data().begin(), basis_.data().end()}; }
  bool contains(const Field& f, const Vec& v) const;
  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix b) : basis_(std::move(b)) {}
  Matrix basis_;
};

/// {x : m·x = 0}.
Subspace kernel(const Field& f, const Matrix& m);
/// True iff v lies in the span of w.  Throws on a dimension mismatch.
bool solve_membership(const Field& f, const Subspace& w, const Vec& v);
Subspace intersect(const Field& f, const Subspace& a, const Subspace& b);

/// Incremental echelon basis, for rank computations over many columns.
class EchelonBuilder {
 public:
  EchelonBuilder(const Field& f, int n) : f_(f), n_(n), pivot_row_(n, -1) {}
  /// Adds v; returns true if it increased the rank.
  bool insert(Vec v);
  /// Same for a vector longer than kMaxDim.
  bool insert(std::span<const Elem> v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  Field f_;
  int n_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<int> pivot_row_;
};

// Text format: "rows cols q2" then the entries row by row.
void write_matrix(std::ostream& os, const Matrix& m, int q2);
Matrix read_matrix(std::istream& is, int expected_q2);

}  // namespace hgc
