#include "suframe/check_report.h"

#include <tuple>

namespace suframe {

const char* CheckStatusName(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kExpectedFailConfirmed: return "expected-fail-confirmed";
    case CheckStatus::kExpectedFailViolated: return "expected-fail-violated";
  }
  return "fail";
}

CheckStatus ResolveStatus(bool holds, bool expect_failure) {
  if (expect_failure) {
    return holds ? CheckStatus::kExpectedFailViolated
                 : CheckStatus::kExpectedFailConfirmed;
  }
  return holds ? CheckStatus::kPass : CheckStatus::kFail;
}

bool ReportLess(const CheckReport& a, const CheckReport& b) {
  return std::tie(a.suite, a.name, a.params) < std::tie(b.suite, b.name, b.params);
}

}  // namespace suframe
