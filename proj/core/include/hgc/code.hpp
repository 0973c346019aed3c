#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hgc/field.hpp"
#include "hgc/linalg.hpp"
#include "hgc/pluecker.hpp"
#include "hgc/polar.hpp"

namespace hgc {

/// Bilinear alternating form φ(x, y) = xᵀ·S·y with S antisymmetric and zero
/// on the diagonal.  Rank and radical are computed on construction.
class AlternatingForm {
 public:
  /// Throws std::invalid_argument unless S is square, Sᵀ = -S and diag(S) = 0.
  AlternatingForm(Field f, Matrix s);
  /// Builds S from the strictly upper entries S_01, S_02, …, S_{m-2,m-1}.
  static AlternatingForm from_upper(Field f, int m, std::span<const Elem> upper);
  static AlternatingForm zero(Field f, int m) { return AlternatingForm(f, Matrix(m, m)); }
  /// a·bᵀ - b·aᵀ; its radical is {x : a·x = b·x = 0}.
  static AlternatingForm rank2(Field f, const Vec& a, const Vec& b);

  int m() const { return s_.rows(); }
  const Field& field() const { return f_; }
  const Matrix& matrix() const { return s_; }
  std::vector<Elem> upper() const;
  int rank() const { return rank_; }
  const Subspace& radical() const { return radical_; }
  bool is_zero() const { return rank_ == 0; }

  Elem operator()(const Vec& x, const Vec& y) const;
  AlternatingForm scaled(Elem a) const;
  AlternatingForm plus(const AlternatingForm& o) const;

 private:
  Field f_;
  Matrix s_;
  int rank_ = 0;
  Subspace radical_;
};

struct Codeword {
  std::vector<Elem> values;
  std::size_t weight = 0;
};

/// φ on a line with canonical basis (v, w): vᵀ·S·w.  Zero iff the line is
/// totally isotropic for φ.
Elem evaluate(const AlternatingForm& phi, const IsotropicLine& line);
/// Σ_{i<j} S_ij·p_ij on a coordinate vector of length C(m,2).
Elem evaluate_pluecker(const AlternatingForm& phi, std::span<const Elem> coords);

Codeword codeword(const AlternatingForm& phi, const ProjectiveSystem& sys);
/// Number of lines of the system not killed by φ.
std::size_t weight_direct(const AlternatingForm& phi, const ProjectiveSystem& sys);

/// The three possible values of wt(φ_u): 0, the secant value
/// q^(2m-7) + (-1)^m q^(m-4), and the tangent value q^(2m-7).
struct CaseValues {
  std::uint64_t secant;
  std::uint64_t tangent;
};
CaseValues case_values(int m, int q);

/// Number of isotropic lines through [u] not killed by φ, counted by scanning
/// the isotropic points collinear with u.  Throws if u is zero or not isotropic.
std::uint64_t wt_phi_u(const AlternatingForm& phi, const HermitianSpace& s, std::span<const ProjectivePoint> points,
                       const Vec& u);
/// Same count from precomputed incidence: lines through points[idx].
std::uint64_t wt_phi_u(const AlternatingForm& phi, const PointStar& star, std::size_t idx, const Vec& u);

/// Per-point weights and the weight reconstructed from them.
struct RecursiveWeight {
  std::uint64_t weight = 0;
  std::vector<std::uint64_t> per_point;  ///< wt(φ_u) for each isotropic point
};
/// (1/(q⁴-1))·Σ_u wt(φ_u) over all isotropic vectors u.  Throws
/// std::logic_error if the sum is not divisible by q⁴-1.
RecursiveWeight weight_recursive(const AlternatingForm& phi, const ProjectiveSystem& sys, const PointStar& star);

/// Evaluates codewords for many forms using precomputed partial sums: the K
/// coordinates are split into groups and every combination of a group's
/// digits has its partial codeword stored.
class CodewordEngine {
 public:
  explicit CodewordEngine(const ProjectiveSystem& sys, std::size_t max_table_bytes = std::size_t(256) << 20);

  std::size_t n() const { return n_; }
  int k() const { return k_; }
  int groups() const { return static_cast<int>(group_len_.size()); }
  int group_len(int g) const { return group_len_[g]; }

  std::size_t weight(std::span<const Elem> upper) const;
  void codeword(std::span<const Elem> upper, std::vector<Elem>& out) const;

  // Low-level access used by the exhaustive scan.
  std::size_t stride() const { return stride_; }
  const Elem* row(int group, std::size_t index) const {
    return tables_[group].data() + index * stride_;
  }
  std::size_t rows(int group) const { return tables_[group].size() / stride_; }
  void accumulate(Elem* acc, const Elem* row) const;
  std::size_t count_nonzero(const Elem* v) const;

 private:
  Field f_;
  std::size_t n_;
  int k_;
  std::size_t stride_;
  bool xor_add_;
  std::vector<int> group_start_, group_len_;
  std::vector<std::vector<Elem>> tables_;
};

struct SpectrumOptions {
  bool exhaustive = true;
  std::uint64_t samples = 0;       ///< sample mode: number of forms
  std::uint64_t seed = 1;          ///< sample mode: mt19937_64 seed
  bool nonzero_samples = true;     ///< redraw the zero form in sample mode
  std::uint64_t budget = 1u << 24; ///< exhaustive mode: max number of forms
  int jobs = 1;
  /// Keep up to this many forms of minimum nonzero weight.
  std::size_t keep_min_words = 0;
};

struct SpectrumReport {
  std::string mode;  ///< "exhaustive" or "sample"
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t forms_scanned = 0;
  std::uint64_t seed = 0;
  double seconds = 0;
  std::uint64_t min_nonzero_weight = 0;  ///< 0 if no nonzero form was seen
  std::vector<std::vector<Elem>> min_words;  ///< upper-triangle vectors, sorted
};

/// Exhaustive mode enumerates every alternating form once: the upper entries
/// are the base-q² digits of a counter, S_01 least significant.
SpectrumReport spectrum(const ProjectiveSystem& sys, const SpectrumOptions& opt);

/// Upper-triangle digits of the exhaustive-scan index.
std::vector<Elem> form_digits(std::uint64_t index, int k, int q2);

/// Seeded stream of uniformly random forms (upper-triangle vectors).  Each
/// digit is mt19937_64() mod q², so streams are identical on every platform.
class FormSampler {
 public:
  FormSampler(int k, int q2, std::uint64_t seed, bool nonzero);
  std::vector<Elem> next();

 private:
  int k_, q2_;
  bool nonzero_;
  std::mt19937_64 rng_;
};

}  // namespace hgc
