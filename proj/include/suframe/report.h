#ifndef SUFRAME_REPORT_H_
#define SUFRAME_REPORT_H_

// Suite orchestration and report emission (JSON and markdown).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suframe/check_report.h"
#include "suframe/identity_checks.h"
#include "suframe/numeric_lab.h"
#include "suframe/torus_bundles.h"

namespace suframe {

inline constexpr const char* kToolkitVersion = "1.0.0";

enum class Command { kVerify, kSample, kRoundtrip, kEinv, kBernoulli, kTorus, kReport };

const char* CommandName(Command command);

enum class EinvGroup { kBoth, kEven, kOddQuotient };

enum class OutputFormat { kJson, kMarkdown };

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// Accepts "a..b" or a single integer; throws kUsage on anything else or
// when lo > hi.
IntRange ParseRange(const std::string& text);

struct SuiteConfig {
  Command command = Command::kVerify;
  IntRange m{2, 6};
  IntRange n{1, 5};
  std::vector<IdentityTag> identities;  // empty means all
  RelationConfig relations;
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  CellMapKind map = CellMapKind::kPhi;
  EinvGroup group = EinvGroup::kBoth;
  LiftConvention convention = LiftConvention::kPrinted;
  int upto = 12;
  OutputFormat format = OutputFormat::kJson;
  bool timing = false;
};

// Throws kUsage when a range or count is outside the module preconditions.
void ValidateConfig(const SuiteConfig& config);

// One row of the report. Trial and table results are carried in `data` as
// ordered (key, text) pairs.
struct ReportEntry {
  CheckReport check;
  std::vector<std::pair<std::string, std::string>> data;
};

struct StatusCounts {
  int pass = 0;
  int fail = 0;
  int expected_fail_confirmed = 0;
  int expected_fail_violated = 0;
};

struct SuiteReport {
  std::string version = kToolkitVersion;
  SuiteConfig config;
  std::vector<ReportEntry> entries;  // sorted by (suite, name, params)
  StatusCounts summary;
  bool overall_pass = true;
};

// Runs every check of the configured command in parallel and assembles a
// deterministic report.
SuiteReport RunSuite(const SuiteConfig& config);

// Canonical JSON omits timing unless config.timing is set.
std::string ToJson(const SuiteReport& report);
std::string ToMarkdown(const SuiteReport& report);

int ExitCode(const SuiteReport& report);  // 0 pass, 1 verification failure

}  // namespace suframe

#endif  // SUFRAME_REPORT_H_
