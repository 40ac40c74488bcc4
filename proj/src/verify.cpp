#include "affineqm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "affineqm/analytic.hpp"

namespace affineqm::verify {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

nlohmann::json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

// ||(-D^2 + V - eps) phi|| over nodes whose left neighbour is >= cutoff.
double operator_residual(const std::function<double(double)>& phi,
                         const std::function<double(double)>& potential, double eps,
                         const HalfLineGrid& grid, double cutoff) {
  const double h = grid.spacing();
  double s = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    const double x = grid.node(i);
    if (x - h < cutoff) continue;
    const double left = phi(x - h);
    const double mid = phi(x);
    const double right = phi(x + h);
    const double r = -(right - 2.0 * mid + left) / (h * h) + (potential(x) - eps) * mid;
    s += r * r;
  }
  return std::sqrt(h * s);
}

}  // namespace

nlohmann::json ClosureReport::to_json() const {
  nlohmann::json curve = nlohmann::json::array();
  for (const auto& [k, e] : error_curve) curve.push_back({k, e});
  return {{"test_function", test_function},
          {"kmax", kmax},
          {"nk", nk},
          {"window", {window_lo, window_hi}},
          {"reconstruction_error", reconstruction_error},
          {"error_curve", curve}};
}

double closure_bump(double x) { return std::exp(-4.0 * (x - 3.0) * (x - 3.0)); }

ClosureReport closure_check(const std::function<double(double)>& f, std::string id,
                            std::span<const double> kmax_ladder, const ClosureOptions& opts) {
  if (kmax_ladder.empty()) throw std::invalid_argument("closure_check: empty K ladder");
  if (!(opts.window_lo > 0.0) || !(opts.window_hi < opts.xmax) ||
      !(opts.window_lo < opts.window_hi)) {
    throw std::invalid_argument("closure_check: window must lie inside (0, xmax)");
  }
  const auto yrule =
      specfun::composite_gauss_legendre(0.0, opts.xmax, opts.y_panel_width, opts.y_panel_points);
  const auto xrule = specfun::composite_gauss_legendre(opts.window_lo, opts.window_hi,
                                                       opts.y_panel_width, opts.y_panel_points);
  std::vector<double> fw(yrule.size());
  for (std::size_t i = 0; i < yrule.size(); ++i) fw[i] = f(yrule.nodes()[i]) * yrule.weights()[i];
  std::vector<double> fx(xrule.size());
  for (std::size_t i = 0; i < xrule.size(); ++i) fx[i] = f(xrule.nodes()[i]);

  ClosureReport report;
  report.test_function = std::move(id);
  report.window_lo = opts.window_lo;
  report.window_hi = opts.window_hi;
  for (double kmax : kmax_ladder) {
    if (!(kmax > 0.0)) throw std::invalid_argument("closure_check: K must be positive");
    const auto krule = specfun::composite_gauss_legendre(0.0, kmax, opts.k_panel_width,
                                                         opts.k_panel_points);
    std::vector<double> recon(xrule.size(), 0.0);
    for (std::size_t a = 0; a < krule.size(); ++a) {
      const double k = krule.nodes()[a];
      double g = 0.0;
      for (std::size_t i = 0; i < yrule.size(); ++i) {
        if (fw[i] == 0.0) continue;
        g += analytic::free_eigenfunction(k, yrule.nodes()[i]) * fw[i];
      }
      const double gw = g * krule.weights()[a];
      for (std::size_t i = 0; i < xrule.size(); ++i) {
        recon[i] += gw * analytic::free_eigenfunction(k, xrule.nodes()[i]);
      }
    }
    double err2 = 0.0;
    for (std::size_t i = 0; i < xrule.size(); ++i) {
      const double d = recon[i] - fx[i];
      err2 += xrule.weights()[i] * d * d;
    }
    const double err = std::sqrt(err2);
    report.error_curve.emplace_back(kmax, err);
    report.kmax = kmax;
    report.nk = static_cast<int>(krule.size());
    report.reconstruction_error = err;
  }
  return report;
}

Matrix orthonormality_matrix(int nmax, const PhysicalParams& params,
                             const specfun::QuadratureRule& rule) {
  if (nmax < 0 || nmax > 20) {
    throw std::invalid_argument("orthonormality_matrix: nmax must lie in [0, 20]");
  }
  const std::size_t dim = static_cast<std::size_t>(nmax) + 1;
  std::vector<std::vector<double>> samples(dim, std::vector<double>(rule.size()));
  for (std::size_t n = 0; n < dim; ++n) {
    const analytic::AnalyticEigenstate state(static_cast<int>(n), analytic::Branch::First,
                                             params);
    for (std::size_t i = 0; i < rule.size(); ++i) samples[n][i] = state(rule.nodes()[i]);
  }
  Matrix g(dim, std::vector<double>(dim, 0.0));
  for (std::size_t n = 0; n < dim; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        s += rule.weights()[i] * samples[n][i] * samples[m][i];
      }
      g[n][m] = g[m][n] = s;
    }
  }
  return g;
}

double max_deviation_from_identity(const Matrix& g) {
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      worst = std::max(worst, std::fabs(g[i][j] - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

std::vector<ResidualEntry> residual_report_analytic(const PhysicalParams& params, int count,
                                                    const HalfLineGrid& grid,
                                                    double energy_offset, double cutoff) {
  const auto pot = SpikedPotential::half_oscillator(params);
  const auto potential = [&](double x) { return eval_potential(pot, x); };
  const auto fine = grid.refined();
  std::vector<ResidualEntry> out;
  for (int n = 0; n < count; ++n) {
    const analytic::AnalyticEigenstate state(n, analytic::Branch::First, params);
    const auto phi = [&](double x) { return state(x); };
    const double eps = state.eps() + energy_offset;
    ResidualEntry e;
    e.index = n;
    e.residual = operator_residual(phi, potential, eps, grid, cutoff);
    e.residual_fine = operator_residual(phi, potential, eps, fine, cutoff);
    e.order = std::log2(e.residual / e.residual_fine);
    out.push_back(e);
  }
  return out;
}

std::vector<ResidualEntry> residual_report_free(std::span<const double> ks,
                                                const HalfLineGrid& grid, double energy_offset,
                                                double cutoff) {
  const auto pot = SpikedPotential::free_particle();
  const auto potential = [&](double x) { return eval_potential(pot, x); };
  const auto fine = grid.refined();
  std::vector<ResidualEntry> out;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const double k = ks[j];
    const auto phi = [k](double x) { return analytic::free_eigenfunction(k, x); };
    ResidualEntry e;
    e.index = static_cast<int>(j);
    e.residual = operator_residual(phi, potential, k * k + energy_offset, grid, cutoff);
    e.residual_fine = operator_residual(phi, potential, k * k + energy_offset, fine, cutoff);
    e.order = std::log2(e.residual / e.residual_fine);
    out.push_back(e);
  }
  return out;
}

std::vector<ResidualEntry> residual_report_numeric(const eigensolve::TridiagonalOperator& op,
                                                   const eigensolve::SpectrumResult& spectrum,
                                                   double energy_offset) {
  if (spectrum.eigenvectors.size() != spectrum.eigenvalues.size()) {
    throw std::invalid_argument("residual_report_numeric: spectrum has no eigenvectors");
  }
  std::vector<ResidualEntry> out;
  for (std::size_t j = 0; j < spectrum.eigenvalues.size(); ++j) {
    ResidualEntry e;
    e.index = static_cast<int>(j);
    e.residual = eigensolve::eigen_residual(op, spectrum.eigenvalues[j] + energy_offset,
                                            spectrum.eigenvectors[j].values);
    e.residual_fine = kNaN;
    e.order = kNaN;
    out.push_back(e);
  }
  return out;
}

nlohmann::json to_json(const std::vector<ResidualEntry>& entries) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    rows.push_back({{"index", e.index},
                    {"residual", number_or_null(e.residual)},
                    {"residual_fine", number_or_null(e.residual_fine)},
                    {"order", number_or_null(e.order)}});
  }
  return rows;
}

nlohmann::json to_json(const Matrix& m) { return m; }

CommutatorStudy commutator_convergence(std::span<const int> npoints, double xmax,
                                       const PhysicalParams& params) {
  CommutatorStudy study;
  for (int n : npoints) {
    const HalfLineGrid grid(xmax, n);
    study.npoints.push_back(n);
    study.residuals.push_back(commutator_residual(commutator_test_function(grid), params));
  }
  for (std::size_t i = 1; i < study.residuals.size(); ++i) {
    const double hratio = (study.npoints[i] + 1.0) / (study.npoints[i - 1] + 1.0);
    study.orders.push_back(std::log(study.residuals[i - 1] / study.residuals[i]) /
                           std::log(hratio));
  }
  return study;
}

int count_sign_changes(std::span<const double> values, double tol) {
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, std::fabs(v));
  const double floor = tol * vmax;
  int changes = 0;
  int last_sign = 0;
  for (double v : values) {
    if (std::fabs(v) <= floor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

}  // namespace affineqm::verify
