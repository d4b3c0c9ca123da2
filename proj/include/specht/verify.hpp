#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specht {

/// One check inside a verification suite.
struct CaseResult {
  std::string id;
  bool pass = false;
  std::string witness;  // failure detail, empty on pass
  double seconds = 0.0;
};

/// Suite outcome: ordered cases plus free-form observations. Notes carry
/// results that are reported without being judged (open comparisons,
/// instance counts); they never affect pass().
struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  std::vector<std::string> notes;

  bool pass() const;
  std::string text() const;
  /// Alphabetical key order; "seconds" is the only field that varies from
  /// run to run with a fixed seed.
  std::string json_text() const;
};

/// Knobs shared by the suites. Zero means the suite default for max_n and
/// d; seed and trials feed the vanishing suite only.
struct VerifyOptions {
  int max_n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  int trials = 200;
};

/// Suite names run_verification_suite accepts, in canonical order:
/// initial-terms, trm-lemma, grobner-jdd, radical, contraction, recursion,
/// ses-jdd, char-free, vanishing.
const std::vector<std::string>& verification_suites();

/// Runs one suite. Unknown names throw DomainError; a degree-cap abort
/// inside a case propagates as DegreeCapError.
VerificationReport run_verification_suite(const std::string& suite,
                                          const VerifyOptions& opt = {});

}  // namespace specht
