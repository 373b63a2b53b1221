#include "suframe/torus_bundles.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "suframe/error.h"

namespace suframe {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool UseUpper(double eta, MuBranch branch) {
  if (branch == MuBranch::kLower) return false;
  if (branch == MuBranch::kUpper) return true;
  return eta > kPi;
}

double WrapAngle(double a) {
  double out = std::fmod(a, kTwoPi);
  if (out < 0.0) out += kTwoPi;
  return out;
}

std::string FormatSample(const TorusPoint& q, Complex s) {
  std::ostringstream os;
  os.precision(17);
  os << "eta=" << q.eta << ",theta=" << q.theta << ",z=(" << q.z.real() << ","
     << q.z.imag() << "),zeta=(" << s.real() << "," << s.imag() << ")";
  return os.str();
}

struct SampleOutcome {
  double residual = 0.0;
  std::string text;
};

// Runs `samples` evaluations of `residual_of` and keeps the worst one.
CheckReport RunSampled(const std::string& name, const std::string& params,
                       bool expect_failure, int samples, double tol,
                       std::mt19937_64& rng,
                       const std::function<SampleOutcome(std::mt19937_64&)>& residual_of) {
  const auto started = Clock::now();
  CheckReport report;
  report.suite = "torus";
  report.name = name;
  report.params = params;
  SampleOutcome worst;
  for (int s = 0; s < samples; ++s) {
    SampleOutcome out = residual_of(rng);
    if (out.residual > worst.residual || s == 0) worst = out;
  }
  const bool holds = worst.residual <= tol;
  report.status = ResolveStatus(holds, expect_failure);
  std::ostringstream note;
  note.precision(3);
  note << "max residual " << std::scientific << worst.residual;
  report.note = note.str();
  if (!holds) report.witness = Witness{-1, -1, worst.text, std::nullopt};
  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           Clock::now() - started)
                           .count();
  return report;
}

}  // namespace

SpherePoint SphereFromRw(double r, Complex w) {
  return SpherePoint{1.0 - 2.0 * r * r, 2.0 * r * w};
}

SpherePoint ProjectSU2(const CMatrix2& u) {
  const Complex a = u(0, 0);
  return SpherePoint{1.0 - 2.0 * std::norm(a), 2.0 * a * u(0, 1)};
}

double SphereDistance(const SpherePoint& a, const SpherePoint& b) {
  return std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
}

SpherePoint MuPoint(double eta, double theta, Complex z, MuBranch branch) {
  const double c = std::cos(eta / 2.0);
  const double s = std::sin(eta / 2.0);
  if (!UseUpper(eta, branch)) {
    return SphereFromRw(c, z * std::polar(1.0, theta) * s);
  }
  const double t = 2.0 - eta / kPi;
  return SphereFromRw(-c, z * std::polar(1.0, theta * t) * s);
}

const char* LiftConventionName(LiftConvention convention) {
  return convention == LiftConvention::kPrinted ? "printed" : "conjugate-phase";
}

CMatrix2 MuLift(double eta, double theta, Complex z, LiftConvention convention,
                MuBranch branch) {
  const double c = std::cos(eta / 2.0);
  const double s = std::sin(eta / 2.0);
  const Complex phase = convention == LiftConvention::kPrinted ? std::conj(z) : z;
  if (!UseUpper(eta, branch)) {
    return Rot2(phase * c, std::polar(1.0, theta) * s);
  }
  const double t = 2.0 - eta / kPi;
  return Rot2(-phase * c, std::polar(1.0, theta * t) * s);
}

CMatrix QkElement(int m, int k, const TorusPoint& q) {
  if (k < 1 || 2 * k + 1 >= m) {
    throw Error(ErrorCode::kInvalidIndex,
                "torus index k must satisfy 1 <= k <= m/2 - 1");
  }
  return DPairNumeric(m, k, std::polar(1.0, q.eta), q.z * std::polar(1.0, q.theta)) *
         SmallDNumeric(m, std::conj(q.z));
}

TorusPoint ActRight(const TorusPoint& q, Complex s) {
  return TorusPoint{q.eta, WrapAngle(q.theta + std::arg(s)), q.z * std::conj(s)};
}

bool IsTorusErratum(LiftConvention convention, const std::string& check_name) {
  if (convention == LiftConvention::kPrinted) {
    return check_name == "covering[lower]" || check_name == "covering[upper]" ||
           check_name == "equivariance[lower]" ||
           check_name == "equivariance[upper]";
  }
  return check_name == "equivariance[upper]";
}

std::vector<CheckReport> CheckTorusBundle(const TorusCheckConfig& config) {
  if (config.samples < 1) {
    throw Error(ErrorCode::kUsage, "samples must be at least 1");
  }
  const int m = config.m;
  const LiftConvention conv = config.convention;
  std::vector<CheckReport> reports;
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> lower_eta(0.0, kPi);
  std::uniform_real_distribution<double> upper_eta(kPi, kTwoPi);

  auto random_point = [&](std::mt19937_64& rng, bool upper) {
    return TorusPoint{upper ? upper_eta(rng) : lower_eta(rng), angle(rng),
                      std::polar(1.0, angle(rng))};
  };

  for (int k = 1; 2 * k + 1 < m; ++k) {
    std::ostringstream ps;
    ps << "m=" << m << ",k=" << k << ",convention=" << LiftConventionName(conv);
    const std::string params = ps.str();
    std::mt19937_64 rng(DeriveSeed(config.seed, static_cast<std::uint64_t>(k)));

    for (bool upper : {false, true}) {
      const std::string branch = upper ? "[upper]" : "[lower]";
      const MuBranch b = upper ? MuBranch::kUpper : MuBranch::kLower;

      std::string name = "covering" + branch;
      reports.push_back(RunSampled(
          name, params, IsTorusErratum(conv, name), config.samples, config.tol,
          rng, [&](std::mt19937_64& g) {
            TorusPoint q = random_point(g, upper);
            SpherePoint lhs = ProjectSU2(MuLift(q.eta, q.theta, q.z, conv, b));
            SpherePoint rhs = MuPoint(q.eta, q.theta, q.z, b);
            return SampleOutcome{SphereDistance(lhs, rhs), FormatSample(q, 1.0)};
          }));

      name = "equivariance" + branch;
      reports.push_back(RunSampled(
          name, params, IsTorusErratum(conv, name), config.samples, config.tol,
          rng, [&](std::mt19937_64& g) {
            TorusPoint q = random_point(g, upper);
            Complex s = std::polar(1.0, angle(g));
            TorusPoint moved = ActRight(q, s);
            CMatrix2 act;
            act << std::conj(s), 0.0, 0.0, s;
            CMatrix2 lhs = MuLift(moved.eta, moved.theta, moved.z, conv, b);
            CMatrix2 rhs = MuLift(q.eta, q.theta, q.z, conv, b) * act;
            return SampleOutcome{(lhs - rhs).cwiseAbs().maxCoeff(),
                                 FormatSample(q, s)};
          }));
    }

    reports.push_back(RunSampled(
        "action-parametrization", params, false, config.samples, config.tol, rng,
        [&](std::mt19937_64& g) {
          TorusPoint q = random_point(g, angle(g) > kPi);
          Complex s = std::polar(1.0, angle(g));
          CMatrix lhs = QkElement(m, k, ActRight(q, s));
          CMatrix rhs = QkElement(m, k, q) * SmallDNumeric(m, s);
          return SampleOutcome{(lhs - rhs).cwiseAbs().maxCoeff(),
                               FormatSample(q, s)};
        }));

    reports.push_back(RunSampled(
        "seam[eta=pi]", params, false, config.samples, config.tol, rng,
        [&](std::mt19937_64& g) {
          TorusPoint q{kPi, angle(g), std::polar(1.0, angle(g))};
          double point = SphereDistance(MuPoint(kPi, q.theta, q.z, MuBranch::kLower),
                                        MuPoint(kPi, q.theta, q.z, MuBranch::kUpper));
          double lift = (MuLift(kPi, q.theta, q.z, conv, MuBranch::kLower) -
                         MuLift(kPi, q.theta, q.z, conv, MuBranch::kUpper))
                            .cwiseAbs()
                            .maxCoeff();
          return SampleOutcome{std::max(point, lift), FormatSample(q, 1.0)};
        }));

    reports.push_back(RunSampled(
        "seam[eta=0|2pi]", params, false, config.samples, config.tol, rng,
        [&](std::mt19937_64& g) {
          TorusPoint q{0.0, angle(g), std::polar(1.0, angle(g))};
          double point =
              SphereDistance(MuPoint(0.0, q.theta, q.z, MuBranch::kLower),
                             MuPoint(kTwoPi, q.theta, q.z, MuBranch::kUpper));
          double lift = (MuLift(0.0, q.theta, q.z, conv, MuBranch::kLower) -
                         MuLift(kTwoPi, q.theta, q.z, conv, MuBranch::kUpper))
                            .cwiseAbs()
                            .maxCoeff();
          return SampleOutcome{std::max(point, lift), FormatSample(q, 1.0)};
        }));
  }
  std::sort(reports.begin(), reports.end(), ReportLess);
  return reports;
}

}  // namespace suframe
