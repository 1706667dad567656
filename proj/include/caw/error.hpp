#pragma once

#include <stdexcept>
#include <string>

namespace caw {

/// Error with a stable machine-readable code. Codes split into two classes:
/// input/usage defects (CLI exit 2) and verification failures (CLI exit 1).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

  /// True when the condition is a property of the inputs rather than a
  /// failed verification (drives the CLI exit code).
  bool is_input_error() const {
    static const char* input_codes[] = {
        "BadParams",      "CycleDetected", "NonPositiveWeight", "TooLarge",
        "UnknownElement", "MissingWeights", "RankOutOfRange",   "Degenerate",
        "NotPrefixClosed", "WordNotInLanguage", "NotAParallelClass",
        "NoSuchEdge",     "NotASink",      "NotAGlobalPair",    "EmptyEdgeSet",
        "NoBelt",         "NotOrderReversing", "ZeroMiddleTerm",
        "WeightDomainMismatch", "SideConditionViolated", "BadInput",
        "NotAnExtension", "AxiomViolation",
        "Disconnected",   "NotInterval",
    };
    for (const char* c : input_codes)
      if (code_ == c) return true;
    return false;
  }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace caw
