#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgc/code.hpp"
#include "hgc/counting.hpp"
#include "hgc/pluecker.hpp"
#include "hgc/polar.hpp"

namespace hgc {

/// f_φ([x]) = [x]^{⊥φ ⊥η}.  With H = I this is [S^q·x^q].  Returns nullopt
/// when x lies in the radical of φ (the kernel of f_φ).
std::optional<ProjectivePoint> f_phi(const AlternatingForm& phi, const HermitianSpace& s, const ProjectivePoint& p);
/// Same map computed as two subspace perps, valid for any Gram matrix.
std::optional<ProjectivePoint> f_phi_by_perps(const AlternatingForm& phi, const HermitianSpace& s,
                                              const ProjectivePoint& p);

/// Type of an isotropic point u for φ:
///   A: f_φ([u]) = [u] or u ∈ Rad(φ)       (wt(φ_u) = 0)
///   B: f_φ([u]) ≠ [u] and not isotropic   (secant value)
///   C: f_φ([u]) ≠ [u] and isotropic       (tangent value)
enum class PointClass : std::uint8_t { A, B, C };

struct ClassificationReport {
  // Vector counts: every projective point contributes q²-1 vectors.
  std::uint64_t a = 0, b = 0, c = 0;
  int rad_dim = 0;
  RadicalProfile rad_profile;
  std::uint64_t fix_count = 0;  ///< isotropic points fixed by f_φ
  std::uint64_t weight_from_abc = 0;
  std::optional<std::uint64_t> weight_direct;
  std::vector<PointClass> labels;  ///< one per isotropic point, in point order
  std::vector<std::string> checks;
  bool all_checks_pass = true;
};

/// Labels every isotropic point through f_φ and reconstructs the weight.
/// Pass the system to also fill weight_direct and the agreement check.
ClassificationReport abc_partition(const AlternatingForm& phi, const HermitianSpace& s,
                                   std::span<const ProjectivePoint> points, const ProjectiveSystem* sys = nullptr);
inline ClassificationReport abc_partition(const AlternatingForm& phi, const ProjectiveSystem& sys) {
  return abc_partition(phi, sys.space(), sys.points(), &sys);
}

/// [q^(2m-7)(B+C) + (-1)^m q^(m-4) B] / (q⁴-1).  Throws std::invalid_argument
/// if A+B+C ≠ (q²-1)·mu(m) and std::logic_error if the quotient is not integral.
std::uint64_t weight_from_abc(int m, int q, std::uint64_t a, std::uint64_t b, std::uint64_t c);

// ---------------------------------------------------------------------------
// Bounds on |A| by rank.

/// Largest number of points of R ∩ H_m over radicals R of forms of rank 2i.
BigInt mu_max(int m, int i, int q);
/// (q^(2i)-1)(q+1) + (q²-1)·mu_max(m, i).
BigInt xi(int m, int i, int q);

/// Exact lower bound num/den on the weight of forms of rank 2i.
struct WeightBound {
  BigInt num;
  BigInt den;
  /// Smallest integer >= num/den.
  BigInt ceil() const;
  bool admits(std::uint64_t weight) const { return BigInt(weight) * den >= num; }
};
WeightBound d_lower(int m, int i, int q);

struct BoundRow {
  int i = 0;
  BigInt xi;
  BigInt mu_max;
  WeightBound d_lower;
};
struct BoundTable {
  int m = 0;
  int q = 0;
  std::vector<BoundRow> rows;
};
BoundTable bound_table(int m, int q);

/// Indices i = 1..⌊m/2⌋ ordered by decreasing xi (ties keep the smaller i first).
std::vector<int> xi_ranking(int m, int q);

// ---------------------------------------------------------------------------
// Minimum-weight constructions.

struct ConstructedForm {
  AlternatingForm form;
  std::uint64_t weight = 0;    ///< certified by weight_direct
  std::uint64_t expected = 0;  ///< value the construction targets
  std::string method;          ///< "witt-basis", "canonical-symplectic", "random-search"
  std::uint64_t attempts = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kConstructionRetries = 10'000;

/// Rank-2 form whose radical meets H_m in [Π_1]H_{m-3} (m odd) or [Π_2]H_{m-4}
/// (m even).  Weight q^(4m-12) - q^(3m-9) (odd) or q^(4m-12) (even).
/// Throws std::runtime_error if no candidate certifies within the retry budget.
ConstructedForm construct_rank2_min_form(const ProjectiveSystem& sys, std::uint64_t seed = 1);

/// Non-singular form permutable with η (m = 4, 6): A = (q^m-1)(q+1), B = 0 and
/// weight q^(4m-12) - q^(2m-6).
ConstructedForm construct_permutable_form(const ProjectiveSystem& sys, std::uint64_t seed = 1);

struct Characterization {
  bool ok = false;
  std::string reason;
};

/// Checks that a minimum-weight form has the structure the theory predicts
/// for its (m, q).  Throws std::invalid_argument if φ is not of minimum weight.
Characterization check_min_characterization(const AlternatingForm& phi, const ProjectiveSystem& sys);

// ---------------------------------------------------------------------------

enum class MinDistanceStrategy { exhaustive, construct_and_sample };

struct MinDistanceResult {
  std::uint64_t d = 0;
  std::vector<Elem> witness;  ///< upper-triangle entries of a form of weight d
  std::string certificate;    ///< "exhaustive" or "constructed+sampled"
  std::string witness_kind;
  std::uint64_t forms_scanned = 0;
  std::uint64_t sample_min = 0;  ///< smallest nonzero weight seen while sampling
  std::uint64_t seed = 0;
};

MinDistanceResult min_distance(const ProjectiveSystem& sys, MinDistanceStrategy strategy, std::uint64_t samples = 0,
                               std::uint64_t seed = 1, int jobs = 1, std::uint64_t budget = 1u << 24);

}  // namespace hgc
