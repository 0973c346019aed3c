#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgc/classify.hpp"
#include "hgc/code.hpp"
#include "hgc/pluecker.hpp"
#include "hgc/polar.hpp"

namespace hgc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// The three weight computations for one form plus the pointwise invariants.
struct FormCheck {
  int rank = 0;
  std::uint64_t direct = 0;
  std::uint64_t recursive = 0;
  std::uint64_t from_abc = 0;
  bool case_values_ok = true;   ///< every wt(φ_u) is 0, secant or tangent
  bool labels_agree = true;     ///< A/B/C label matches the value of wt(φ_u)
  bool conservation_ok = true;  ///< A+B+C = (q²-1)·mu(m)
  bool bound_ok = true;         ///< weight >= d_i for rank 2i
  bool weights_agree() const { return direct == recursive && recursive == from_abc; }
  bool ok() const { return weights_agree() && case_values_ok && labels_agree && conservation_ok && bound_ok; }
};

FormCheck check_form(const AlternatingForm& phi, const ProjectiveSystem& sys, const PointStar& star);

struct FormScanSummary {
  std::uint64_t forms = 0;
  std::uint64_t weight_mismatches = 0;
  std::uint64_t case_value_violations = 0;
  std::uint64_t label_mismatches = 0;
  std::uint64_t conservation_failures = 0;
  std::uint64_t bound_violations = 0;
  std::string first_failure;  ///< upper-triangle digits of the first bad form

  void add(const FormCheck& c, std::span<const Elem> upper);
  void merge(const FormScanSummary& o);
};

/// Every form when there are at most `exhaustive_limit` of them, otherwise
/// `samples` seeded random nonzero forms.
FormScanSummary scan_forms(const ProjectiveSystem& sys, std::uint64_t samples, std::uint64_t seed,
                           std::uint64_t exhaustive_limit = 4096);

/// Checks that for m in [m_lo, m_hi] and q in qs the xi orderings are the
/// expected ones.  Returns a list of mismatch descriptions (empty when all hold).
std::vector<std::string> xi_ordering_mismatches(int m_lo, int m_hi, const std::vector<int>& qs);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  std::uint64_t budget = 1u << 24;
  std::uint64_t line_budget = kDefaultLineBudget;
  int jobs = 1;
};

/// Every invariant of the library for one (m, q²).
std::vector<CheckResult> verify_instance(int m, int p, int e, const VerifyOptions& opt);

/// The seven acceptance criteria, in order.
std::vector<CheckResult> acceptance_suite(const VerifyOptions& opt);

}  // namespace hgc
