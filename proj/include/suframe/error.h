#ifndef SUFRAME_ERROR_H_
#define SUFRAME_ERROR_H_

#include <stdexcept>
#include <string>

namespace suframe {

enum class ErrorCode {
  kZeroDenominator,
  kDivisionByZero,
  kRelationMismatch,
  kMissingSymbol,
  kInconsistentConjugate,
  kInvalidIndex,
  kDimensionMismatch,
  kUnsupported,
  kOutOfHypothesis,
  kIllConditioned,
  kNotCanonical,
  kNonUnitary,
  kUsage,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure the library reports is one of these; `code()` lets callers
// dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace suframe

#endif  // SUFRAME_ERROR_H_
