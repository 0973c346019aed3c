#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgc/field.hpp"
#include "hgc/linalg.hpp"
#include "hgc/polar.hpp"

namespace hgc {

/// Number of Plücker coordinates, C(m,2).
inline int pair_count(int m) { return m * (m - 1) / 2; }
/// Position of the pair (i,j), i < j, in the order (0,1),(0,2),…,(m-2,m-1).
inline int pair_index(int m, int i, int j) { return i * (2 * m - i - 1) / 2 + (j - i - 1); }

/// Plücker coordinates p_ij = v_i·w_j - v_j·w_i of a 2-space, scaled so that
/// the first nonzero coordinate is 1.
struct PlueckerPoint {
  std::vector<Elem> coords;
  friend bool operator==(const PlueckerPoint&, const PlueckerPoint&) = default;
  friend auto operator<=>(const PlueckerPoint&, const PlueckerPoint&) = default;
};

/// Throws std::invalid_argument if v and w are dependent.
PlueckerPoint pluecker(const Field& f, const Vec& v, const Vec& w);
inline PlueckerPoint pluecker(const Field& f, const IsotropicLine& l) { return pluecker(f, l.v, l.w); }

/// All three-term Grassmann–Plücker relations p_ij p_kl - p_ik p_jl + p_il p_jk = 0.
bool satisfies_pluecker_relations(const Field& f, int m, std::span<const Elem> coords);

/// The isotropic lines with their Plücker images: the projective system of
/// the code.  omega() holds N rows of K coordinates (column j of the
/// generator matrix is row j here).
class ProjectiveSystem {
 public:
  ProjectiveSystem(HermitianSpace space, std::vector<ProjectivePoint> points, std::vector<IsotropicLine> lines);

  const HermitianSpace& space() const { return space_; }
  const Field& field() const { return space_.field(); }
  int m() const { return space_.m(); }
  std::size_t n() const { return lines_.size(); }
  int k() const { return k_; }
  std::span<const ProjectivePoint> points() const { return points_; }
  std::span<const IsotropicLine> lines() const { return lines_; }
  std::span<const Elem> omega() const { return omega_; }
  std::span<const Elem> column(std::size_t j) const {
    return {omega_.data() + j * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  /// The K×N generator matrix.
  Matrix generator_matrix() const;
  /// rank of the generator matrix, via an incremental basis over columns.
  int generator_rank() const;

 private:
  HermitianSpace space_;
  std::vector<ProjectivePoint> points_;
  std::vector<IsotropicLine> lines_;
  int k_;
  std::vector<Elem> omega_;
};

inline constexpr std::uint64_t kDefaultLineBudget = 5'000'000;

/// Enumerates points and lines and embeds them.  Throws std::length_error if
/// the number of lines exceeds max_lines.
ProjectiveSystem build_system(const HermitianSpace& s, std::uint64_t max_lines = kDefaultLineBudget);

}  // namespace hgc
