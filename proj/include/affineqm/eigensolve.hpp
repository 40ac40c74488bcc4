// Finite-difference spectrum of -d^2/du^2 + V on (0, L) with Dirichlet ends.
//
// The shifted problem on x in (-b, inf) is solved in u = x + b, so the
// singular point always sits at the grid origin and the grid spans
// (0, b + xmax).

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "affineqm/model.hpp"

namespace affineqm::eigensolve {

/// Raised when the solver cannot produce a result for a given operator.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric tridiagonal matrix: diagonal_i = 2/h^2 + V(u_i - b),
/// offdiagonal_i = -1/h^2.
struct TridiagonalOperator {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;
  HalfLineGrid grid;
  SpikedPotential model;

  int size() const { return static_cast<int>(diagonal.size()); }
  std::vector<double> apply(std::span<const double> v) const;
  /// Gershgorin interval enclosing the spectrum.
  std::pair<double, double> gershgorin() const;
  /// Number of eigenvalues strictly below sigma (Sturm sequence count).
  int count_below(double sigma) const;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // dimensionless, strictly increasing
  /// Normalized to h * sum v_i^2 = 1, first component >= 0.
  std::vector<Wavefunction> eigenvectors;
  int npoints = 0;
  double xmax = 0.0;  // grid extent in u
  double h = 0.0;
  SpikedPotential model;
};

/// Grid in u covering (0, b + xmax) with the spacing of an npoints grid on
/// (0, xmax).
HalfLineGrid grid_for(const SpikedPotential& pot, double xmax, int npoints);

TridiagonalOperator build_hamiltonian(const SpikedPotential& pot, const HalfLineGrid& grid);

/// The `count` smallest eigenvalues by Sturm bisection, optionally with
/// eigenvectors from inverse iteration.
SpectrumResult solve_spectrum(const TridiagonalOperator& op, int count, bool want_vectors);

/// Matrix residual ||H v - eps v|| / ||v||.
double eigen_residual(const TridiagonalOperator& op, double eps, std::span<const double> v);

/// Grids with successively halved spacing, starting at `base`.
std::vector<HalfLineGrid> halving_ladder(const HalfLineGrid& base, int levels);

struct RefinedSpectrum {
  std::vector<double> extrapolated;
  /// log2 of successive difference ratios; NaN with fewer than three grids.
  std::vector<double> observed_order;
  /// False when an eigenvalue's differences change sign along the ladder.
  std::vector<bool> monotone;
  std::vector<SpectrumResult> levels;
};

/// Solves on each grid and Richardson-extrapolates the two finest levels
/// assuming an O(h^2) leading error. Grids must have halving spacing.
RefinedSpectrum refine_spectrum(const SpikedPotential& pot, int count,
                                std::span<const HalfLineGrid> ladder);

struct SweepRow {
  double b;
  std::vector<double> eigenvalues;  // dimensionless
};

struct SweepOptions {
  double xmax = 12.0;
  int npoints = 8000;
  bool parallel = true;
};

/// Spectrum of the shifted oscillator for each b. Distinct b values may be
/// solved concurrently; output order follows `bvalues`.
std::vector<SweepRow> sweep_b(std::span<const double> bvalues, int count,
                              const PhysicalParams& params, const SweepOptions& opts = {});

}  // namespace affineqm::eigensolve
