// End-to-end verification of X = M and of the bijection, case by case.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "e6kkr/bijection.hpp"
#include "e6kkr/cartan.hpp"
#include "e6kkr/polynomial.hpp"
#include "e6kkr/tensor.hpp"

namespace e6kkr {

/// Failure counters for the per-step checks made while running delta.
struct StepCounters {
  std::size_t steps = 0;
  std::size_t tied_steps = 0;  ///< steps where delta had more than one branch
  std::size_t statistic = 0;  ///< charge drop or local energy step
  std::size_t table = 0;      ///< vacancy-change tables vs recomputation
  std::size_t tie = 0;        ///< tie branches disagree
  std::size_t image = 0;      ///< output not a valid rc of weight lambda - wt(b)
  std::size_t monotone = 0;   ///< selected lengths not monotone

  std::size_t failures() const { return statistic + table + tie + image + monotone; }
  StepCounters& operator+=(const StepCounters& other);
};

/// Runs one delta step on rc and checks every per-step invariant.
/// Returns the delta result.
DeltaResult checked_delta(const RiggedConfiguration& rc, StepCounters& counters);

/// Phi with every step checked.
Path checked_phi(const RiggedConfiguration& rc, StepCounters& counters);

/// Phi^{-1} that also runs every inverse tie branch; tie disagreements are
/// counted in counters.tie.
RiggedConfiguration checked_phi_inv(const Path& path, StepCounters& counters);

struct CaseReport {
  Weight lambda;
  int length = 0;
  LaurentPolynomial x;
  LaurentPolynomial m;
  bool equal = false;
  std::size_t paths = 0;
  std::size_t rcs = 0;
  std::size_t configs = 0;
  std::size_t bijection_checked = 0;  ///< rcs sent through Phi
  std::size_t roundtrip = 0;          ///< phi_inv(phi(rc)) != rc or phi(phi_inv(p)) != p
  std::size_t statistic = 0;          ///< cc != D(phi), plus step statistic failures
  std::size_t table = 0;
  std::size_t tie = 0;
  std::size_t image = 0;              ///< phi(rc) outside P(lambda, L), non-injective, step image
  std::size_t vacancy = 0;            ///< configurations failing a vacancy identity
  std::size_t fermionic = 0;          ///< 1 if the two M computations differ
  double seconds = 0.0;

  std::size_t failures() const;
};

struct VerifyOptions {
  int max_length = 4;
  unsigned jobs = 1;
  /// Lengths up to this are checked exhaustively through the bijection;
  /// longer ones every `sample_stride`-th rigged configuration.
  int exhaustive_bijection_length = 6;
  std::size_t sample_stride = 16;
};

struct VerifyReport {
  std::vector<CaseReport> cases;

  std::size_t failing_cases() const;
  bool ok() const { return failing_cases() == 0; }
};

/// Dominant weights lambda for which RC(lambda, L) or P(lambda, L) can be
/// non-empty, in lexicographic order.
std::vector<Weight> candidate_weights(int length);

CaseReport verify_case(const Weight& lambda, int length, const std::vector<Path>& paths,
                       const VerifyOptions& options);

VerifyReport run_verification(const VerifyOptions& options);

/// One line per case, then "RESULT pass|fail cases=<n> failures=<n>".
void write_report(std::ostream& out, const VerifyReport& report, bool with_timing);

}  // namespace e6kkr
