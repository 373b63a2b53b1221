#include "suframe/report.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <future>
#include <sstream>

#include <json.hpp>

#include "suframe/e_invariant.h"
#include "suframe/error.h"

namespace suframe {
namespace {

using Json = nlohmann::ordered_json;

std::string Sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::string RangeText(IntRange r) {
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

void Usage(const std::string& message) { throw Error(ErrorCode::kUsage, message); }

const char* GroupName(EinvGroup g) {
  switch (g) {
    case EinvGroup::kBoth: return "both";
    case EinvGroup::kEven: return "even";
    case EinvGroup::kOddQuotient: return "odd-quotient";
  }
  return "?";
}

CheckReport MakeCheck(std::string suite, std::string name, std::string params,
                      bool holds) {
  CheckReport c;
  c.suite = std::move(suite);
  c.name = std::move(name);
  c.params = std::move(params);
  c.status = ResolveStatus(holds, false);
  return c;
}

ReportEntry FromTrial(const std::string& name, const std::string& params,
                      const TrialReport& t, const char* error_key) {
  ReportEntry e;
  e.check = MakeCheck("numeric", name, params, t.failures == 0);
  e.check.duration_ms = t.elapsed_ms;
  if (t.witness && t.failures > 0) e.check.witness = Witness{-1, -1, *t.witness, std::nullopt};
  e.data = {{"trials", std::to_string(t.trials)},
            {"failures", std::to_string(t.failures)},
            {error_key, Sci(t.worst_error)},
            {"seed", std::to_string(t.seed)}};
  return e;
}

std::vector<ReportEntry> Wrap(std::vector<CheckReport> checks) {
  std::vector<ReportEntry> out;
  for (auto& c : checks) out.push_back(ReportEntry{std::move(c), {}});
  return out;
}

ReportEntry EinvEntry(const EInvariantResult& r) {
  const QmodZ target = AdamsTarget(r.l);
  ReportEntry e;
  e.check = MakeCheck("einv", EProvenanceName(r.provenance), "n=" + std::to_string(*r.n),
                      r.value.signed_value == target.signed_value &&
                          r.value.class_rep == target.class_rep);
  e.check.note = "adams target " + target.signed_value.ToString();
  e.data = {{"n", std::to_string(*r.n)},
            {"l", std::to_string(r.l)},
            {"group", r.GroupLabel()},
            {"signed_value", r.value.signed_value.ToString()},
            {"class", r.value.class_rep.ToString()},
            {"order", ElementOrder(r.value).str()}};
  return e;
}

bool IsPrime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Denominator of B^_{2l} is the product of primes p with (p - 1) | 2l.
BigInt StaudtClausenDenominator(int l) {
  BigInt out = 1;
  for (int p = 2; p <= 2 * l + 1; ++p) {
    if (IsPrime(p) && (2 * l) % (p - 1) == 0) out *= p;
  }
  return out;
}

ReportEntry BernoulliEntry(int l) {
  const Rational b = BernoulliTop(l);
  ReportEntry e;
  e.check = MakeCheck("bernoulli", "B_l", "l=" + std::to_string(l),
                      b.Sign() > 0 && b.den() == StaudtClausenDenominator(l));
  e.data = {{"l", std::to_string(l)},
            {"value", b.ToString()},
            {"classical", BernoulliClassical(2 * l).ToString()}};
  return e;
}

using Task = std::function<std::vector<ReportEntry>()>;

void AddVerifyTasks(const SuiteConfig& c, IntRange m, std::vector<Task>& tasks) {
  std::vector<IdentityTag> tags = c.identities.empty() ? AllIdentityTags() : c.identities;
  for (int mm = m.lo; mm <= m.hi; ++mm) {
    for (IdentityTag tag : tags) {
      tasks.push_back([tag, mm, rel = c.relations] { return Wrap(CheckIdentity(tag, mm, rel)); });
    }
  }
}

void AddSampleTask(int m, int trials, std::uint64_t seed, CellMapKind map,
                   std::vector<Task>& tasks) {
  tasks.push_back([=] {
    std::string params = "m=" + std::to_string(m) + ",trials=" + std::to_string(trials) +
                         ",seed=" + std::to_string(seed);
    return std::vector<ReportEntry>{
        FromTrial(std::string("collision[") + CellMapKindName(map) + "]", params,
                  CollisionTrial(m, trials, seed, map), "min_coset_residual")};
  });
}

void AddRoundtripTask(int m, int trials, std::uint64_t seed, double tol,
                      std::vector<Task>& tasks) {
  tasks.push_back([=] {
    std::string params = "m=" + std::to_string(m) + ",trials=" + std::to_string(trials) +
                         ",seed=" + std::to_string(seed) + ",tol=" + Sci(tol);
    return std::vector<ReportEntry>{
        FromTrial("roundtrip", params, RoundtripTrial(m, trials, seed, tol), "worst_error")};
  });
}

void AddEinvTasks(IntRange n, EinvGroup group, std::vector<Task>& tasks) {
  tasks.push_back([=] {
    std::vector<ReportEntry> out;
    for (int k = n.lo; k <= n.hi; ++k) {
      if (group != EinvGroup::kOddQuotient && k >= 2) out.push_back(EinvEntry(ETheorem(k)));
      if (group != EinvGroup::kEven) out.push_back(EinvEntry(EProposition(k)));
    }
    return out;
  });
}

void AddBernoulliTasks(int upto, std::vector<Task>& tasks) {
  tasks.push_back([=] {
    std::vector<ReportEntry> out;
    for (int l = 1; l <= upto; ++l) out.push_back(BernoulliEntry(l));
    return out;
  });
}

void AddTorusTasks(IntRange m, int samples, std::uint64_t seed, LiftConvention conv,
                   std::vector<Task>& tasks) {
  for (int mm = m.lo; mm <= m.hi; ++mm) {
    tasks.push_back([=] {
      return Wrap(CheckTorusBundle(TorusCheckConfig{mm, samples, seed, 1e-10, conv}));
    });
  }
}

Json ConfigJson(const SuiteConfig& c) {
  Json identities = Json::array();
  for (IdentityTag t : c.identities) identities.push_back(IdentityTagName(t));
  Json j;
  j["command"] = CommandName(c.command);
  j["m"] = RangeText(c.m);
  j["n"] = RangeText(c.n);
  j["identities"] = identities;
  j["relations"] = c.relations.ToString();
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["map"] = CellMapKindName(c.map);
  j["group"] = GroupName(c.group);
  j["convention"] = LiftConventionName(c.convention);
  j["upto"] = c.upto;
  return j;
}

std::string Escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

std::string DataValue(const ReportEntry& e, const std::string& key) {
  for (const auto& [k, v] : e.data) {
    if (k == key) return v;
  }
  return "";
}

}  // namespace

const char* CommandName(Command command) {
  switch (command) {
    case Command::kVerify: return "verify";
    case Command::kSample: return "sample";
    case Command::kRoundtrip: return "roundtrip";
    case Command::kEinv: return "einv";
    case Command::kBernoulli: return "bernoulli";
    case Command::kTorus: return "torus";
    case Command::kReport: return "report";
  }
  return "?";
}

IntRange ParseRange(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      Usage("invalid range '" + text + "'");
    }
    return std::stoi(s);
  };
  IntRange r;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) Usage("empty range '" + text + "'");
  return r;
}

void ValidateConfig(const SuiteConfig& c) {
  switch (c.command) {
    case Command::kVerify:
      if (c.m.lo < 2 || c.m.hi > 7) Usage("verify requires 2 <= m <= 7");
      break;
    case Command::kSample:
      if (c.m.lo < 2 || c.m.hi > 8) Usage("sample requires 2 <= m <= 8");
      if (c.trials < 1) Usage("trials must be >= 1");
      for (int m = c.m.lo; m <= c.m.hi; ++m) {
        if (c.map == CellMapKind::kPsi && m < 4) Usage("psi requires m >= 4");
        if (c.map == CellMapKind::kPsiModC && (m < 3 || m % 2 == 0)) {
          Usage("psi-mod-c requires odd m >= 3");
        }
      }
      break;
    case Command::kRoundtrip:
      if (c.m.lo < 2 || c.m.hi > 8) Usage("roundtrip requires 2 <= m <= 8");
      if (c.trials < 1) Usage("trials must be >= 1");
      if (c.tol < 0.0) Usage("tol must be >= 0");
      break;
    case Command::kEinv:
      if (c.n.lo < 1) Usage("einv requires n >= 1");
      if (c.group == EinvGroup::kEven && c.n.lo < 2) Usage("the even group requires n >= 2");
      break;
    case Command::kBernoulli:
      if (c.upto < 1) Usage("upto must be >= 1");
      break;
    case Command::kTorus:
      if (c.m.lo < 4 || c.m.hi > 8) Usage("torus requires 4 <= m <= 8");
      if (c.trials < 1) Usage("trials must be >= 1");
      break;
    case Command::kReport:
      break;
  }
}

SuiteReport RunSuite(const SuiteConfig& config) {
  ValidateConfig(config);
  std::vector<Task> tasks;
  const SuiteConfig& c = config;
  switch (c.command) {
    case Command::kVerify:
      AddVerifyTasks(c, c.m, tasks);
      break;
    case Command::kSample:
      for (int m = c.m.lo; m <= c.m.hi; ++m) AddSampleTask(m, c.trials, c.seed, c.map, tasks);
      break;
    case Command::kRoundtrip:
      for (int m = c.m.lo; m <= c.m.hi; ++m) AddRoundtripTask(m, c.trials, c.seed, c.tol, tasks);
      break;
    case Command::kEinv:
      AddEinvTasks(c.n, c.group, tasks);
      break;
    case Command::kBernoulli:
      AddBernoulliTasks(c.upto, tasks);
      break;
    case Command::kTorus:
      AddTorusTasks(c.m, c.trials, c.seed, c.convention, tasks);
      break;
    case Command::kReport:
      AddVerifyTasks(c, IntRange{2, 6}, tasks);
      AddEinvTasks(IntRange{1, 6}, EinvGroup::kBoth, tasks);
      AddBernoulliTasks(12, tasks);
      for (int m = 3; m <= 5; ++m) AddRoundtripTask(m, 100, c.seed, 1e-9, tasks);
      AddSampleTask(3, 10000, c.seed, CellMapKind::kPhi, tasks);
      AddSampleTask(4, 10000, c.seed, CellMapKind::kPsi, tasks);
      AddSampleTask(5, 10000, c.seed, CellMapKind::kPsiModC, tasks);
      AddTorusTasks(IntRange{4, 6}, 1000, c.seed, LiftConvention::kPrinted, tasks);
      AddTorusTasks(IntRange{4, 6}, 1000, c.seed, LiftConvention::kConjugatePhase, tasks);
      break;
  }

  std::vector<std::future<std::vector<ReportEntry>>> futures;
  futures.reserve(tasks.size());
  for (auto& task : tasks) futures.push_back(std::async(std::launch::async, task));

  SuiteReport report;
  report.config = config;
  for (auto& f : futures) {
    for (auto& e : f.get()) report.entries.push_back(std::move(e));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const ReportEntry& a, const ReportEntry& b) { return ReportLess(a.check, b.check); });
  for (const auto& e : report.entries) {
    switch (e.check.status) {
      case CheckStatus::kPass: ++report.summary.pass; break;
      case CheckStatus::kFail: ++report.summary.fail; break;
      case CheckStatus::kExpectedFailConfirmed: ++report.summary.expected_fail_confirmed; break;
      case CheckStatus::kExpectedFailViolated: ++report.summary.expected_fail_violated; break;
    }
  }
  report.overall_pass = report.summary.fail == 0 && report.summary.expected_fail_violated == 0;
  return report;
}

std::string ToJson(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& e : report.entries) {
    Json j;
    j["suite"] = e.check.suite;
    j["name"] = e.check.name;
    j["params"] = e.check.params;
    j["status"] = CheckStatusName(e.check.status);
    if (e.check.witness) {
      Json w;
      if (e.check.witness->row >= 0) {
        w["row"] = e.check.witness->row;
        w["col"] = e.check.witness->col;
      }
      w["text"] = e.check.witness->text;
      j["witness"] = w;
    }
    if (!e.check.note.empty()) j["note"] = e.check.note;
    if (!e.data.empty()) {
      Json d;
      for (const auto& [k, v] : e.data) d[k] = v;
      j["data"] = d;
    }
    if (report.config.timing) j["duration_ms"] = e.check.duration_ms;
    checks.push_back(j);
  }
  Json root;
  root["version"] = report.version;
  root["config"] = ConfigJson(report.config);
  root["checks"] = checks;
  root["summary"] = Json{{"pass", report.summary.pass},
                         {"fail", report.summary.fail},
                         {"expected_fail_confirmed", report.summary.expected_fail_confirmed},
                         {"expected_fail_violated", report.summary.expected_fail_violated}};
  root["overall"] = report.overall_pass ? "pass" : "fail";
  return root.dump(2) + "\n";
}

std::string ToMarkdown(const SuiteReport& report) {
  std::ostringstream os;
  os << "# suframe report\n\n";
  os << "- version: " << report.version << "\n";
  os << "- command: " << CommandName(report.config.command) << "\n";
  os << "- seed: " << report.config.seed << "\n";
  os << "- overall: " << (report.overall_pass ? "pass" : "fail") << "\n\n";

  os << "## Summary\n\n| status | count |\n|---|---|\n";
  os << "| pass | " << report.summary.pass << " |\n";
  os << "| fail | " << report.summary.fail << " |\n";
  os << "| expected-fail-confirmed | " << report.summary.expected_fail_confirmed << " |\n";
  os << "| expected-fail-violated | " << report.summary.expected_fail_violated << " |\n\n";

  std::vector<const ReportEntry*> einv;
  std::vector<const ReportEntry*> bern;
  for (const auto& e : report.entries) {
    if (e.check.suite == "einv") einv.push_back(&e);
    if (e.check.suite == "bernoulli") bern.push_back(&e);
  }
  if (!einv.empty()) {
    os << "## e-invariants\n\n| n | l | group | signed value | class | order |\n"
       << "|---|---|---|---|---|---|\n";
    for (const ReportEntry* e : einv) {
      os << "| " << DataValue(*e, "n") << " | " << DataValue(*e, "l") << " | "
         << DataValue(*e, "group") << " | " << DataValue(*e, "signed_value") << " | "
         << DataValue(*e, "class") << " | " << DataValue(*e, "order") << " |\n";
    }
    os << "\n";
  }
  if (!bern.empty()) {
    os << "## Bernoulli numbers\n\n| l | B_l | classical B_2l |\n|---|---|---|\n";
    for (const ReportEntry* e : bern) {
      os << "| " << DataValue(*e, "l") << " | " << DataValue(*e, "value") << " | "
         << DataValue(*e, "classical") << " |\n";
    }
    os << "\n";
  }

  os << "## Checks\n\n| suite | name | params | status | note |\n|---|---|---|---|---|\n";
  for (const auto& e : report.entries) {
    os << "| " << e.check.suite << " | " << e.check.name << " | " << Escape(e.check.params)
       << " | " << CheckStatusName(e.check.status) << " | " << Escape(e.check.note) << " |\n";
  }

  bool any_witness = false;
  for (const auto& e : report.entries) {
    if (!e.check.witness) continue;
    if (!any_witness) os << "\n## Witnesses\n\n";
    any_witness = true;
    os << "- " << e.check.suite << "/" << e.check.name << " (" << e.check.params << ")";
    if (e.check.witness->row >= 0) {
      os << " entry (" << e.check.witness->row << ", " << e.check.witness->col << ")";
    }
    os << ": `" << e.check.witness->text << "`\n";
  }
  return os.str();
}

int ExitCode(const SuiteReport& report) { return report.overall_pass ? 0 : 1; }

}  // namespace suframe
