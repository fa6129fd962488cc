#pragma once

#include <stdexcept>
#include <string>

namespace linassign {

enum class Errc {
  kEmptySource,
  kEmptyTarget,
  kInfeasibleCardinality,
  kRangeExceeded,
  kCardinalityMismatch,
  kNoRemovalNeeded,
  kInstanceTooLarge,
  kHeightOutOfRange,
  kMalformedRemovalSet,
  kUnsortedInput,
  kBadSymbol,
  kSyntaxError,
  kBadParameter,
};

/// Recoverable input/usage error (bad instance, bad file, bad flag).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Violation of a condition the algorithm guarantees. Indicates an
/// implementation bug; never recoverable.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace linassign
