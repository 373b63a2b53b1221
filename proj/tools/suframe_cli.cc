#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "suframe/error.h"
#include "suframe/report.h"

namespace {

using suframe::CellMapKind;
using suframe::Command;
using suframe::EinvGroup;
using suframe::LiftConvention;
using suframe::OutputFormat;

constexpr int kUsageExit = 2;

struct Options {
  std::string m = "2..6";
  std::string n = "1..5";
  std::string identity;
  std::string unit_norm = "on";
  std::string circle_pairs = "on";
  std::string map = "phi";
  std::string group = "both";
  std::string convention = "printed";
  std::string format = "json";
  std::string out;
};

std::vector<suframe::IdentityTag> ParseIdentities(const std::string& list) {
  std::vector<suframe::IdentityTag> tags;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto tag = suframe::ParseIdentityTag(item);
    if (!tag) throw suframe::Error(suframe::ErrorCode::kUsage, "unknown identity '" + item + "'");
    tags.push_back(*tag);
  }
  return tags;
}

void AddOutputOptions(CLI::App* sub, Options& o, suframe::SuiteConfig& c) {
  sub->add_option("--format", o.format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  sub->add_option("--out", o.out, "write the report to this path instead of stdout");
  sub->add_flag("--timing", c.timing, "include wall-clock durations");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"suframe: cell structure and e-invariant checks for SU(m)"};
  app.require_subcommand(1);
  Options o;
  suframe::SuiteConfig c;

  auto* verify = app.add_subcommand("verify", "symbolic identity suite");
  verify->add_option("--m", o.m, "size range, e.g. 2..6");
  verify->add_option("--identity", o.identity, "comma-separated identity tags");
  verify->add_option("--unit-norm", o.unit_norm, "on|off")->check(CLI::IsMember({"on", "off"}));
  verify->add_option("--circle-pairs", o.circle_pairs, "on|off")
      ->check(CLI::IsMember({"on", "off"}));
  AddOutputOptions(verify, o, c);

  auto* sample = app.add_subcommand("sample", "collision trials for phi / psi / psi mod C");
  sample->add_option("--m", o.m, "size range")->required();
  sample->add_option("--map", o.map, "phi|psi|psi-mod-c")
      ->check(CLI::IsMember({"phi", "psi", "psi-mod-c"}));
  sample->add_option("--trials", c.trials, "number of sampled pairs");
  sample->add_option("--seed", c.seed, "base seed");
  AddOutputOptions(sample, o, c);

  auto* roundtrip = app.add_subcommand("roundtrip", "evaluate, recover and compare cell points");
  roundtrip->add_option("--m", o.m, "size range")->required();
  roundtrip->add_option("--trials", c.trials, "number of trials");
  roundtrip->add_option("--seed", c.seed, "base seed");
  roundtrip->add_option("--tol", c.tol, "coordinate tolerance");
  AddOutputOptions(roundtrip, o, c);

  auto* einv = app.add_subcommand("einv", "e-invariant table");
  einv->add_option("--n", o.n, "n range, e.g. 2..5");
  einv->add_option("--group", o.group, "even|odd-quotient|both")
      ->check(CLI::IsMember({"even", "odd-quotient", "both"}));
  AddOutputOptions(einv, o, c);

  auto* bernoulli = app.add_subcommand("bernoulli", "topologists' Bernoulli numbers");
  bernoulli->add_option("--upto", c.upto, "largest index l");
  AddOutputOptions(bernoulli, o, c);

  auto* torus = app.add_subcommand("torus", "covering, equivariance and seam checks");
  torus->add_option("--m", o.m, "size range (>= 4)")->required();
  torus->add_option("--samples", c.trials, "samples per check");
  torus->add_option("--seed", c.seed, "base seed");
  torus->add_option("--convention", o.convention, "printed|conjugate-phase")
      ->check(CLI::IsMember({"printed", "conjugate-phase"}));
  AddOutputOptions(torus, o, c);

  auto* report = app.add_subcommand("report", "full default suite");
  report->add_option("--seed", c.seed, "base seed");
  AddOutputOptions(report, o, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }

  try {
    const std::map<CLI::App*, Command> commands{
        {verify, Command::kVerify},       {sample, Command::kSample},
        {roundtrip, Command::kRoundtrip}, {einv, Command::kEinv},
        {bernoulli, Command::kBernoulli}, {torus, Command::kTorus},
        {report, Command::kReport}};
    for (const auto& [sub, command] : commands) {
      if (sub->parsed()) c.command = command;
    }
    if (c.command == Command::kTorus && torus->get_option("--samples")->count() == 0) {
      c.trials = 1000;
    }
    if (c.command == Command::kSample && sample->get_option("--trials")->count() == 0) {
      c.trials = 10000;
    }
    c.m = suframe::ParseRange(o.m);
    c.n = suframe::ParseRange(o.n);
    c.identities = ParseIdentities(o.identity);
    c.relations.unit_norm = o.unit_norm == "on";
    c.relations.circle_pairs = o.circle_pairs == "on";
    c.map = o.map == "phi" ? CellMapKind::kPhi
            : o.map == "psi" ? CellMapKind::kPsi
                             : CellMapKind::kPsiModC;
    c.group = o.group == "even" ? EinvGroup::kEven
              : o.group == "odd-quotient" ? EinvGroup::kOddQuotient
                                          : EinvGroup::kBoth;
    c.convention = o.convention == "printed" ? LiftConvention::kPrinted
                                             : LiftConvention::kConjugatePhase;
    c.format = o.format == "json" ? OutputFormat::kJson : OutputFormat::kMarkdown;
    suframe::ValidateConfig(c);
  } catch (const suframe::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsageExit;
  }

  suframe::SuiteReport result;
  try {
    result = suframe::RunSuite(c);
  } catch (const suframe::Error& e) {
    std::cerr << "error (" << suframe::ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return e.code() == suframe::ErrorCode::kUsage ? kUsageExit : 1;
  }

  const std::string text = c.format == OutputFormat::kJson ? suframe::ToJson(result)
                                                           : suframe::ToMarkdown(result);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << o.out << "\n";
      return kUsageExit;
    }
    file << text;
  }
  return suframe::ExitCode(result);
}
