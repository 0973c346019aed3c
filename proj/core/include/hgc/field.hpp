#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hgc {

/// A field element is its index in 0..q²-1 under the polynomial basis of the
/// defining polynomial: the base-p digits of the index are the coefficients,
/// constant term in the lowest digit.
using Elem = std::uint8_t;

/// GF(q²) for q = p^e together with the subfield GF(q) and the conjugation
/// x -> x^q.  Arithmetic is table driven; the object is immutable and cheap to
/// copy (tables are shared).
class Field {
 public:
  /// Builds GF(p^(2e)).  Throws std::invalid_argument for a non-prime p or a
  /// size outside the table-driven range (q² ≤ 256 with a known modulus).
  static Field make(int p, int e);

  int p() const { return t_->p; }
  int e() const { return t_->e; }
  int q() const { return t_->q; }
  int q2() const { return t_->q2; }

  Elem add(Elem a, Elem b) const { return t_->add[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return t_->sub[idx(a, b)]; }
  Elem mul(Elem a, Elem b) const { return t_->mul[idx(a, b)]; }
  Elem neg(Elem a) const { return t_->neg[a]; }
  /// Multiplicative inverse; inv(0) is 0.
  Elem inv(Elem a) const { return t_->inv[a]; }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// x^q, the involutory automorphism of GF(q²) fixing GF(q).
  Elem frob(Elem a) const { return t_->frob[a]; }
  /// x^(q+1), which lies in GF(q).
  Elem norm(Elem a) const { return t_->norm[a]; }
  Elem pow(Elem a, std::uint64_t k) const;
  bool in_subfield(Elem a) const { return t_->frob[a] == a; }

  /// Primitive element used to build the log tables (the class of x).
  Elem generator() const { return t_->generator; }
  /// Coefficients of the monic defining polynomial of degree 2e over GF(p),
  /// constant term first.
  std::span<const int> modulus() const { return t_->modulus; }
  std::string modulus_string() const;

  /// Raw tables, row-major q2*q2; used by the codeword kernels.
  std::span<const Elem> add_table() const { return t_->add; }
  std::span<const Elem> mul_table() const { return t_->mul; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_->p == b.t_->p && a.t_->e == b.t_->e;
  }

 private:
  struct Tables {
    int p = 0, e = 0, q = 0, q2 = 0;
    std::vector<int> modulus;
    Elem generator = 0;
    std::vector<Elem> add, sub, mul, neg, inv, frob, norm;
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(t_->q2) + b;
  }

  std::shared_ptr<const Tables> t_;
};

bool is_prime(int n);

}  // namespace hgc
