#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgc/field.hpp"
#include "hgc/linalg.hpp"

namespace hgc {

/// V(m, q²) with a non-degenerate Hermitian form η(x, y) = conj(x)ᵀ·H·y
/// (conjugate-linear in the first argument).  H defaults to the identity.
class HermitianSpace {
 public:
  HermitianSpace(Field f, int m);
  /// Throws std::invalid_argument unless H is square, Hermitian and nonsingular.
  HermitianSpace(Field f, Matrix gram);

  int m() const { return m_; }
  const Field& field() const { return f_; }
  const Matrix& gram() const { return gram_; }
  bool identity_gram() const { return identity_; }

 private:
  Field f_;
  int m_;
  Matrix gram_;
  bool identity_ = true;
};

Elem eta(const HermitianSpace& s, const Vec& x, const Vec& y);
inline bool is_isotropic(const HermitianSpace& s, const Vec& x) { return eta(s, x, x) == 0; }

/// A projective point, represented by the vector whose first nonzero entry is 1.
struct ProjectivePoint {
  Vec coords;

  static ProjectivePoint of(const Field& f, const Vec& v);
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords <=> b.coords; }
};

/// A totally isotropic 2-space, kept as its 2×m RREF basis (v, w).
struct IsotropicLine {
  Vec v;
  Vec w;

  friend bool operator==(const IsotropicLine&, const IsotropicLine&) = default;
  friend auto operator<=>(const IsotropicLine& a, const IsotropicLine& b) {
    if (auto c = a.v <=> b.v; c != 0) return c;
    return a.w <=> b.w;
  }
};

/// All isotropic points, sorted lexicographically on their normalized
/// coordinates.  The count equals mu(m).
std::vector<ProjectivePoint> enumerate_points(const HermitianSpace& s);

/// All totally isotropic lines, sorted by canonical RREF key.  Each line is
/// produced once, from the pair (row 1, row 2) of its RREF basis.
std::vector<IsotropicLine> enumerate_lines(const HermitianSpace& s, std::span<const ProjectivePoint> points);
std::vector<IsotropicLine> enumerate_lines(const HermitianSpace& s);

/// The q²+1 points of a line: [v], then [w + a·v] for a in field order.
std::vector<ProjectivePoint> points_on(const Field& f, const IsotropicLine& l);

/// {y : η(w, y) = 0 for all w in W}.
Subspace perp(const HermitianSpace& s, const Subspace& w);

/// Shape of the Hermitian variety cut out on a subspace R: R ∩ H_m is the
/// cone [Π_t]H_{d-t} where t is the dimension of the radical of η|R.
struct RadicalProfile {
  int d = 0;
  int t = 0;
  /// Number of isotropic points of PG(R) from the closed form.
  std::uint64_t formula_points = 0;
  /// Same number from direct enumeration (empty when R is too large).
  std::optional<std::uint64_t> counted_points;
  Subspace vertex;  ///< Π_t = R ∩ R^⊥

  std::string label() const;
  /// Vertex contained in H_m (always true for a radical; kept explicit for reports).
  bool vertex_totally_isotropic = true;
};

RadicalProfile radical_profile(const HermitianSpace& s, const Subspace& r);

/// For every isotropic point, one representative second point on each
/// isotropic line through it.  This is the incidence data behind the
/// point-by-point weight formula.
class PointStar {
 public:
  PointStar(const HermitianSpace& s, std::span<const ProjectivePoint> points, std::span<const IsotropicLine> lines);

  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const Vec> through(std::size_t point) const {
    return {reps_.data() + offsets_[point], offsets_[point + 1] - offsets_[point]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vec> reps_;
};

/// Index of a point in a sorted point list, or -1.
long find_point(std::span<const ProjectivePoint> points, const ProjectivePoint& p);

}  // namespace hgc
