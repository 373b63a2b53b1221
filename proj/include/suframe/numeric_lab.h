#ifndef SUFRAME_NUMERIC_LAB_H_
#define SUFRAME_NUMERIC_LAB_H_

// Floating-point cell maps, coset comparison modulo S or S x C, the
// block-by-block recovery of canonical representatives, and sampling
// trials for recovery and injectivity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suframe/numeric_types.h"

namespace suframe {

struct SphereCoord {
  double r = 1.0;
  Complex w = 0.0;
};

struct TorusCoord {
  Complex z = 1.0;     // z_{2k-1}
  Complex zeta = 1.0;  // zeta_{2k}
};

struct CellPoint {
  int m = 2;
  // sphere[j][i - 1] for 0 <= j <= m - 2, 1 <= i <= m - j - 1.
  std::vector<std::vector<SphereCoord>> sphere;
  // torus[k - 1] for 1 <= k <= n - 1, n = m / 2; empty for phi points.
  std::vector<TorusCoord> torus;

  int RealParameterCount() const;
};

// Number of torus factors available at size m, i.e. floor(m/2) - 1.
int TorusFactorCount(int m);

struct SampleOptions {
  bool open_only = true;
  double r_floor = 0.3;
  bool with_torus = false;
};

// Deterministic in (m, seed, options). Radial coordinates are uniform in
// [r_floor, 1]; open torus coordinates keep z_{2k-1} at arc >= 1e-3 from 1.
CellPoint SampleCell(int m, std::uint64_t seed, const SampleOptions& options);

// prod_j prod_i R_{i;j}(r, w), times prod_k D(z_{2k-1}, zeta_{2k}) when the
// point carries torus coordinates.
CMatrix EvalCellMap(const CellPoint& x);

enum class CosetGroup { kS, kSxC };

const char* CosetGroupName(CosetGroup group);

// True iff g^H h is diagonal within tol with the diagonal pattern of the
// chosen subgroup. Throws kNonUnitary when either input is not in SU(m)
// within 1e-10, kDimensionMismatch on size mismatch, kUnsupported for S x C
// at even m.
bool CosetEqual(const CMatrix& g, const CMatrix& h, CosetGroup group, double tol);

// Diagonal element d(z) c(zeta) of S x C (c(zeta) = diag(1, ..., zeta,
// conj zeta)); with zeta = 1 it is d(z).
CMatrix SxCElement(int m, Complex z, Complex zeta);

// Reads the sphere coordinates back from a canonical representative
// prod_j R_j(r, w). Throws kIllConditioned when a division by a product of
// radii below 1e-8 is needed and kNotCanonical when a peeled block leaves a
// residual above 1e-8.
CellPoint RecoverCell(const CMatrix& g, int m);

// Max coordinatewise distance between two points of equal shape.
double CellDistance(const CellPoint& a, const CellPoint& b);

struct TrialReport {
  int trials = 0;
  int failures = 0;
  double worst_error = 0.0;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  std::optional<std::string> witness;
};

// Samples open cells (r_floor 0.3), evaluates, recovers and compares. A
// trial fails unless its error is strictly below tol.
TrialReport RoundtripTrial(int m, int trials, std::uint64_t seed, double tol);

enum class CellMapKind { kPhi, kPsi, kPsiModC };

const char* CellMapKindName(CellMapKind kind);

// Coset tolerance used by the collision trials.
inline constexpr double kCollisionTol = 1e-8;

// True when the two points have the same image under the chosen map.
bool SameImage(const CellPoint& x, const CellPoint& y, CellMapKind kind,
               double tol = kCollisionTol);

// Draws pairs of distinct open-cell points (r_floor 1e-3) and counts those
// with equal images. worst_error is the smallest coset residual seen.
TrialReport CollisionTrial(int m, int trials, std::uint64_t seed, CellMapKind kind);

// Real parameter count of the cell, dim G/S for even m and dim G/(S x C)
// for odd m.
struct DimensionCount {
  int cell_parameters = 0;
  int quotient_dimension = 0;
};
DimensionCount CellDimension(int m);

}  // namespace suframe

#endif  // SUFRAME_NUMERIC_LAB_H_
