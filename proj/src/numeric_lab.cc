#include "suframe/numeric_lab.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "suframe/error.h"

namespace suframe {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnitaryTol = 1e-10;
constexpr double kRecoveryTol = 1e-8;
constexpr double kOpenArc = 1e-3;

std::int64_t ElapsedMs(Clock::time_point started) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started)
      .count();
}

double PatternResidual(const CMatrix& x, const std::vector<Complex>& pattern) {
  double worst = 0.0;
  for (Eigen::Index d = 0; d < x.rows(); ++d) {
    worst = std::max(worst, std::abs(x(d, d) - pattern[static_cast<std::size_t>(d)]));
  }
  return worst;
}

Complex UnitOrOne(Complex c) {
  double n = std::abs(c);
  return n > 0.0 ? c / n : Complex(1.0);
}

std::vector<Complex> SxCPattern(int m, Complex z, Complex zeta) {
  std::vector<Complex> out(static_cast<std::size_t>(m), z);
  out[0] = std::pow(std::conj(z), m - 1);
  out[static_cast<std::size_t>(m - 2)] *= zeta;
  out[static_cast<std::size_t>(m - 1)] *= std::conj(zeta);
  return out;
}

// Distance of g^H h from the chosen subgroup: off-diagonal mass, then the
// best diagonal pattern match.
double CosetResidual(const CMatrix& g, const CMatrix& h, CosetGroup group) {
  if (g.rows() != h.rows() || g.rows() != g.cols() || h.rows() != h.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "coset comparison needs equal square sizes");
  }
  if (SuResidual(g) > kUnitaryTol || SuResidual(h) > kUnitaryTol) {
    throw Error(ErrorCode::kNonUnitary, "coset comparison input is not in SU(m)");
  }
  const int m = static_cast<int>(g.rows());
  if (group == CosetGroup::kSxC && (m < 3 || m % 2 == 0)) {
    throw Error(ErrorCode::kUnsupported, "S x C requires odd m >= 3");
  }
  const CMatrix x = g.adjoint() * h;
  double off = 0.0;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      if (r != c) off = std::max(off, std::abs(x(r, c)));
    }
  }
  double diag = std::numeric_limits<double>::infinity();
  if (group == CosetGroup::kS) {
    std::vector<Complex> pattern(static_cast<std::size_t>(m), UnitOrOne(x(1, 1)));
    pattern[0] = std::pow(std::conj(pattern[1]), m - 1);
    diag = PatternResidual(x, pattern);
  } else if (m >= 5) {
    Complex z = UnitOrOne(x(1, 1));
    Complex zeta = UnitOrOne(x(m - 2, m - 2) * std::conj(z));
    diag = PatternResidual(x, SxCPattern(m, z, zeta));
  } else {
    // m = 3: diag(conj z^2, z zeta, z conj zeta); z is a square root of
    // conj(x00), so both roots are tried.
    Complex root = std::sqrt(UnitOrOne(std::conj(x(0, 0))));
    for (Complex z : {root, -root}) {
      Complex zeta = UnitOrOne(x(1, 1) * std::conj(z));
      diag = std::min(diag, PatternResidual(x, SxCPattern(m, z, zeta)));
    }
  }
  return std::max(off, diag);
}

void CheckMapSupported(int m, CellMapKind kind) {
  switch (kind) {
    case CellMapKind::kPhi:
      if (m < 2) throw Error(ErrorCode::kUnsupported, "phi requires m >= 2");
      break;
    case CellMapKind::kPsi:
      if (m < 4) throw Error(ErrorCode::kUnsupported, "psi requires m >= 4");
      break;
    case CellMapKind::kPsiModC:
      if (m < 3 || m % 2 == 0) {
        throw Error(ErrorCode::kUnsupported, "psi_mod_C requires odd m >= 3");
      }
      break;
  }
}

std::string DescribePoint(const CellPoint& x) {
  std::ostringstream os;
  os.precision(17);
  os << "m=" << x.m;
  for (std::size_t j = 0; j < x.sphere.size(); ++j) {
    for (std::size_t i = 0; i < x.sphere[j].size(); ++i) {
      const SphereCoord& c = x.sphere[j][i];
      os << ";x" << (i + 1) << "," << j << "=(" << c.r << ",(" << c.w.real() << ","
         << c.w.imag() << "))";
    }
  }
  for (std::size_t k = 0; k < x.torus.size(); ++k) {
    const TorusCoord& t = x.torus[k];
    os << ";y" << (k + 1) << "=(" << std::arg(t.z) << "," << std::arg(t.zeta) << ")";
  }
  return os.str();
}

}  // namespace

int CellPoint::RealParameterCount() const {
  int count = 0;
  for (const auto& block : sphere) count += 2 * static_cast<int>(block.size());
  return count + 2 * static_cast<int>(torus.size());
}

int TorusFactorCount(int m) { return std::max(0, m / 2 - 1); }

CellPoint SampleCell(int m, std::uint64_t seed, const SampleOptions& options) {
  if (m < 2) throw Error(ErrorCode::kInvalidIndex, "m must be at least 2");
  if (options.r_floor < 0.0 || options.r_floor >= 1.0) {
    throw Error(ErrorCode::kUsage, "r_floor must lie in [0, 1)");
  }
  std::mt19937_64 rng(seed);
  const double floor = options.open_only ? options.r_floor : 0.0;
  std::uniform_real_distribution<double> radial(floor, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> open_angle(kOpenArc, kTwoPi - kOpenArc);

  CellPoint x;
  x.m = m;
  for (int j = 0; j <= m - 2; ++j) {
    std::vector<SphereCoord> block;
    for (int i = 1; i <= m - j - 1; ++i) {
      double r = radial(rng);
      double phase = angle(rng);
      Complex w = r == 0.0 ? Complex(1.0)
                           : std::polar(std::sqrt(1.0 - r * r), phase);
      block.push_back(SphereCoord{r, w});
    }
    x.sphere.push_back(std::move(block));
  }
  if (options.with_torus) {
    for (int k = 1; k <= TorusFactorCount(m); ++k) {
      double a = options.open_only ? open_angle(rng) : angle(rng);
      x.torus.push_back(TorusCoord{std::polar(1.0, a), std::polar(1.0, angle(rng))});
    }
  }
  return x;
}

CMatrix EvalCellMap(const CellPoint& x) {
  const int m = x.m;
  CMatrix out = CMatrix::Identity(m, m);
  for (std::size_t j = 0; j < x.sphere.size(); ++j) {
    for (std::size_t i = 0; i < x.sphere[j].size(); ++i) {
      const SphereCoord& c = x.sphere[j][i];
      const int p = static_cast<int>(j);
      out = out * EmbedRotation(m, p, p + static_cast<int>(i) + 1, c.r, c.w);
    }
  }
  for (std::size_t k = 0; k < x.torus.size(); ++k) {
    out = out * DPairNumeric(m, static_cast<int>(k) + 1, x.torus[k].z, x.torus[k].zeta);
  }
  return out;
}

const char* CosetGroupName(CosetGroup group) {
  return group == CosetGroup::kS ? "S" : "SxC";
}

bool CosetEqual(const CMatrix& g, const CMatrix& h, CosetGroup group, double tol) {
  return CosetResidual(g, h, group) <= tol;
}

CMatrix SxCElement(int m, Complex z, Complex zeta) {
  CMatrix out = SmallDNumeric(m, z);
  out(m - 2, m - 2) *= zeta;
  out(m - 1, m - 1) *= std::conj(zeta);
  return out;
}

CellPoint RecoverCell(const CMatrix& g, int m) {
  if (g.rows() != m || g.cols() != m) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix size does not match m");
  }
  CMatrix h = g;
  CellPoint x;
  x.m = m;
  x.sphere.resize(static_cast<std::size_t>(m - 1));
  for (int j = 0; j <= m - 2; ++j) {
    const int mj = m - j - 1;
    std::vector<SphereCoord> block(static_cast<std::size_t>(mj));
    double tail = 1.0;  // r_{s+1} ... r_{m_j}
    for (int s = mj; s >= 1; --s) {
      if (tail < kRecoveryTol) {
        throw Error(ErrorCode::kIllConditioned,
                    "product of radii below 1e-8 during recovery");
      }
      Complex w = -std::conj(h(j + s, j)) / tail;
      double norm = std::abs(w);
      if (norm > 1.0) w /= norm;
      double r = std::sqrt(std::max(0.0, 1.0 - std::norm(w)));
      block[static_cast<std::size_t>(s - 1)] = SphereCoord{r, w};
      tail *= r;
    }
    CMatrix factor = CMatrix::Identity(m, m);
    for (int i = 1; i <= mj; ++i) {
      const SphereCoord& c = block[static_cast<std::size_t>(i - 1)];
      factor = factor * EmbedRotation(m, j, j + i, c.r, c.w);
    }
    h = factor.adjoint() * h;
    double residual = std::abs(h(j, j) - Complex(1.0));
    for (int t = 0; t < m; ++t) {
      if (t != j) residual = std::max({residual, std::abs(h(t, j)), std::abs(h(j, t))});
    }
    if (residual > kRecoveryTol) {
      throw Error(ErrorCode::kNotCanonical,
                  "matrix is not a canonical representative (block " +
                      std::to_string(j) + ")");
    }
    x.sphere[static_cast<std::size_t>(j)] = std::move(block);
  }
  if ((h - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff() > kRecoveryTol) {
    throw Error(ErrorCode::kNotCanonical, "residual after peeling all blocks");
  }
  return x;
}

double CellDistance(const CellPoint& a, const CellPoint& b) {
  if (a.m != b.m || a.sphere.size() != b.sphere.size() ||
      a.torus.size() != b.torus.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cell points have different shapes");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < a.sphere.size(); ++j) {
    if (a.sphere[j].size() != b.sphere[j].size()) {
      throw Error(ErrorCode::kDimensionMismatch, "cell points have different shapes");
    }
    for (std::size_t i = 0; i < a.sphere[j].size(); ++i) {
      worst = std::max({worst, std::abs(a.sphere[j][i].r - b.sphere[j][i].r),
                        std::abs(a.sphere[j][i].w - b.sphere[j][i].w)});
    }
  }
  for (std::size_t k = 0; k < a.torus.size(); ++k) {
    worst = std::max({worst, std::abs(a.torus[k].z - b.torus[k].z),
                      std::abs(a.torus[k].zeta - b.torus[k].zeta)});
  }
  return worst;
}

TrialReport RoundtripTrial(int m, int trials, std::uint64_t seed, double tol) {
  if (m < 2) throw Error(ErrorCode::kInvalidIndex, "m must be at least 2");
  const auto started = Clock::now();
  TrialReport report;
  report.seed = seed;
  report.trials = trials;
  SampleOptions options{true, 0.3, false};
  for (int t = 0; t < trials; ++t) {
    CellPoint x = SampleCell(m, DeriveSeed(seed, static_cast<std::uint64_t>(t)), options);
    double error = std::numeric_limits<double>::infinity();
    std::string failure;
    try {
      error = CellDistance(x, RecoverCell(EvalCellMap(x), m));
    } catch (const Error& e) {
      failure = e.what();
    }
    report.worst_error = std::max(report.worst_error, error);
    if (!(error < tol)) {
      ++report.failures;
      if (!report.witness) {
        report.witness = "trial " + std::to_string(t) + ": " + DescribePoint(x) +
                         (failure.empty() ? "" : " (" + failure + ")");
      }
    }
  }
  report.elapsed_ms = ElapsedMs(started);
  return report;
}

const char* CellMapKindName(CellMapKind kind) {
  switch (kind) {
    case CellMapKind::kPhi: return "phi";
    case CellMapKind::kPsi: return "psi";
    case CellMapKind::kPsiModC: return "psi_mod_C";
  }
  return "?";
}

bool SameImage(const CellPoint& x, const CellPoint& y, CellMapKind kind, double tol) {
  CosetGroup group = kind == CellMapKind::kPsiModC ? CosetGroup::kSxC : CosetGroup::kS;
  return CosetEqual(EvalCellMap(x), EvalCellMap(y), group, tol);
}

TrialReport CollisionTrial(int m, int trials, std::uint64_t seed, CellMapKind kind) {
  CheckMapSupported(m, kind);
  const auto started = Clock::now();
  TrialReport report;
  report.seed = seed;
  report.trials = trials;
  report.worst_error = std::numeric_limits<double>::infinity();
  SampleOptions options{true, 1e-3, kind != CellMapKind::kPhi};
  CosetGroup group = kind == CellMapKind::kPsiModC ? CosetGroup::kSxC : CosetGroup::kS;
  for (int t = 0; t < trials; ++t) {
    const auto base = 2 * static_cast<std::uint64_t>(t);
    CellPoint x = SampleCell(m, DeriveSeed(seed, base), options);
    CellPoint y = SampleCell(m, DeriveSeed(seed, base + 1), options);
    double residual = CosetResidual(EvalCellMap(x), EvalCellMap(y), group);
    report.worst_error = std::min(report.worst_error, residual);
    if (residual <= kCollisionTol && CellDistance(x, y) > 0.0) {
      ++report.failures;
      if (!report.witness) report.witness = DescribePoint(x) + " | " + DescribePoint(y);
    }
  }
  if (trials == 0) report.worst_error = 0.0;
  report.elapsed_ms = ElapsedMs(started);
  return report;
}

DimensionCount CellDimension(int m) {
  const int n = m / 2;
  const int cell = (m * m - m) + 2 * (n - 1);
  const int quotient = m % 2 == 0 ? m * m - 2 : m * m - 3;
  return DimensionCount{cell, quotient};
}

}  // namespace suframe
