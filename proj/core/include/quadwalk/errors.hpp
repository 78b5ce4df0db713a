#pragma once

#include <stdexcept>
#include <string>

namespace quadwalk {

// Symbolic error codes surfaced by every module. The CLI maps input/model
// validation failures to exit status 1 and numerical failures to status 2.
enum class ErrorCode {
  // walk_model / config
  NegativeProbability,
  SumNotOne,
  DegenerateSteps,
  NonZeroDrift,
  UnknownModel,
  ParseError,
  // kernel
  RootFindingFailure,
  BothBranchesInfinite,
  DivisionByZero,
  // classify
  CorrelationOutOfRange,
  // conformal
  NormalizationFailure,
  PoleAtOne,
  NonConvergentLimit,
  // harmonic
  ConstancyViolation,
  DegenerateMu,
  KernelZero,
  TorusThroughZero,
  ImaginaryResidue,
  // oracle
  BoxOverflow,
  // drifted_srw
  FormulaInconsistency,
};

const char* to_string(ErrorCode code);

// True for errors caused by bad user input rather than a numerical breakdown.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return to_string(code_); }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = "") {
  throw Error(code, detail);
}

}  // namespace quadwalk
