// Special functions and quadrature rules used by the closed-form eigenstates.
//
// Everything here is a pure function of its arguments. Only the pieces the
// half-line problems need are provided: Gamma on z > 0, the rising factorial,
// the order-one Bessel function and its zeros, terminating Kummer series and
// Gauss-Legendre rules.

#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace affineqm::specfun {

/// Gamma function for z > 0. Positive integers up to 171 return the exact
/// factorial product; other arguments use a fixed-coefficient Lanczos sum.
/// Throws std::domain_error for z <= 0.
double gamma_fn(double z);

/// Rising factorial (g)_n = g (g+1) ... (g+n-1); (g)_0 = 1.
double pochhammer(double g, int n);

/// Argument at which bessel_j1 switches from the power series to the
/// large-argument Hankel expansion.
inline constexpr double kJ1Crossover = 18.0;

/// J_1 from its power series, summed in extended precision.
double bessel_j1_series(double x);

/// J_1 from the Hankel asymptotic expansion, truncated at its smallest term.
double bessel_j1_asymptotic(double x);

/// J_1(x) for x >= 0 (odd extension for x < 0).
double bessel_j1(double x);

/// j-th positive zero of J_1, j >= 1, to roughly machine precision.
double bessel_j1_zero(int j);

/// Parameters of 1F1(a; c; y). Only terminating series (a = -n) are
/// evaluated.
struct KummerParams {
  double a = 0.0;
  double c = 1.0;
  bool terminating = true;

  /// 1F1(-n; c; .) with n >= 0.
  static KummerParams polynomial(int n, double c);

  /// Polynomial degree n; only meaningful when terminating.
  int degree() const;
};

/// Evaluates a terminating 1F1 as a polynomial in y (Horner form).
/// Throws std::invalid_argument for non-terminating parameters or for c a
/// non-positive integer that the series would reach.
double kummer_1f1(const KummerParams& p, double y);

enum class QuadratureKind {
  GaussLegendre,    // Gauss-Legendre, affinely mapped onto [lo, hi]
  TruncatedUniform  // composite trapezoid on uniform nodes over [lo, hi]
};

class QuadratureRule {
 public:
  QuadratureRule(QuadratureKind kind, std::vector<double> nodes,
                 std::vector<double> weights);

  QuadratureKind kind() const { return kind_; }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }

  double integrate(const std::function<double(double)>& f) const;

 private:
  QuadratureKind kind_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Builds an npoints rule over [domain.first, domain.second].
/// Gauss-Legendre nodes come from Newton iteration on P_n; npoints <= 512.
QuadratureRule build_quadrature(QuadratureKind kind, int npoints,
                                std::pair<double, double> domain);

/// Gauss-Legendre panels of width panel_width covering [lo, hi]; the last
/// panel is shortened to end exactly at hi.
QuadratureRule composite_gauss_legendre(double lo, double hi,
                                        double panel_width,
                                        int points_per_panel);

/// Default rule for half-line integrals: 128-point Gauss-Legendre on
/// [0, xmax]. The Gaussian decay of the bound states makes the tail past
/// xmax = 12 of order exp(-144).
QuadratureRule halfline_rule(double xmax = 12.0, int npoints = 128);

}  // namespace affineqm::specfun
