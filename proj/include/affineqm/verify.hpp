// Cross-checks between the closed forms and the numerical solver.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "affineqm/eigensolve.hpp"
#include "affineqm/model.hpp"
#include "affineqm/specfun.hpp"

namespace affineqm::verify {

struct ClosureOptions {
  double xmax = 12.0;
  /// L2 error window; kept away from x = 0 where the truncated k-integral
  /// converges slowly.
  double window_lo = 1.0;
  double window_hi = 6.0;
  double k_panel_width = 2.0;
  int k_panel_points = 24;
  double y_panel_width = 0.5;
  int y_panel_points = 24;
};

struct ClosureReport {
  std::string test_function;
  double kmax = 0.0;
  int nk = 0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double reconstruction_error = 0.0;
  std::vector<std::pair<double, double>> error_curve;  // (K, error)

  nlohmann::json to_json() const;
};

/// Reconstructs f through the truncated completeness integral
/// f_K(x) = int_0^K dk phi_k(x) int_0^xmax dy phi_k(y) f(y)
/// for each K in the ladder and reports ||f_K - f|| over the window.
ClosureReport closure_check(const std::function<double(double)>& f, std::string id,
                            std::span<const double> kmax_ladder,
                            const ClosureOptions& opts = {});

/// Standard bump exp(-4 (x - 3)^2): numerically supported inside (0.5, 10).
double closure_bump(double x);

using Matrix = std::vector<std::vector<double>>;

/// G_nm = int phi_n phi_m dx for n, m = 0..nmax with the half-line rule.
Matrix orthonormality_matrix(int nmax, const PhysicalParams& params,
                             const specfun::QuadratureRule& rule = specfun::halfline_rule());

double max_deviation_from_identity(const Matrix& g);

struct ResidualEntry {
  int index = 0;
  double residual = 0.0;       // on the given grid
  double residual_fine = 0.0;  // on the grid with h/2 (analytic states only)
  double order = 0.0;          // log2(residual / residual_fine); NaN if unset
};

/// ||(-D^2 + V - eps_n) phi_n|| for analytic half-oscillator states, using
/// nodes with x >= cutoff. energy_offset shifts eps_n (negative control).
std::vector<ResidualEntry> residual_report_analytic(const PhysicalParams& params, int count,
                                                    const HalfLineGrid& grid,
                                                    double energy_offset = 0.0,
                                                    double cutoff = 0.1);

/// Same check for free states phi_k against (-D^2 + 3/(4x^2)) phi = k^2 phi.
std::vector<ResidualEntry> residual_report_free(std::span<const double> ks,
                                                const HalfLineGrid& grid,
                                                double energy_offset = 0.0,
                                                double cutoff = 0.1);

/// Matrix-level residual ||H v - eps v|| / ||v|| of computed eigenpairs.
std::vector<ResidualEntry> residual_report_numeric(const eigensolve::TridiagonalOperator& op,
                                                   const eigensolve::SpectrumResult& spectrum,
                                                   double energy_offset = 0.0);

nlohmann::json to_json(const std::vector<ResidualEntry>& entries);
nlohmann::json to_json(const Matrix& m);

struct CommutatorStudy {
  std::vector<int> npoints;
  std::vector<double> residuals;
  std::vector<double> orders;  // between consecutive grids
};

/// commutator_residual of the standard test function on each grid size over
/// (0, xmax).
CommutatorStudy commutator_convergence(std::span<const int> npoints, double xmax,
                                       const PhysicalParams& params);

/// Standard extent for the commutator test function.
inline constexpr double kCommutatorXmax = 6.0;

/// Number of sign changes, ignoring samples below tol * max|v|.
int count_sign_changes(std::span<const double> values, double tol = 1e-10);

}  // namespace affineqm::verify
