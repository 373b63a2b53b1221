#ifndef SUFRAME_CHECK_REPORT_H_
#define SUFRAME_CHECK_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>

#include "suframe/laurent.h"

namespace suframe {

enum class CheckStatus {
  kPass,
  kFail,
  kExpectedFailConfirmed,
  kExpectedFailViolated,
};

const char* CheckStatusName(CheckStatus status);

// Maps (did the relation hold, was it registered as a known erratum) to a
// status.
CheckStatus ResolveStatus(bool holds, bool expect_failure);

struct Witness {
  int row = -1;  // -1 when the mismatch is not a matrix entry
  int col = -1;
  std::string text;
  std::optional<Polynomial> difference;
};

struct CheckReport {
  std::string suite;
  std::string name;
  std::string params;
  CheckStatus status = CheckStatus::kPass;
  std::optional<Witness> witness;  // present iff status involves a mismatch
  std::string note;
  std::int64_t duration_ms = 0;

  bool Ok() const {
    return status == CheckStatus::kPass ||
           status == CheckStatus::kExpectedFailConfirmed;
  }
};

// Sort key used for deterministic report assembly.
bool ReportLess(const CheckReport& a, const CheckReport& b);

}  // namespace suframe

#endif  // SUFRAME_CHECK_REPORT_H_
