#include "affineqm/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "affineqm/specfun.hpp"

namespace affineqm::analytic {

using specfun::KummerParams;

ScatteringState ScatteringState::make(double k, const PhysicalParams& params) {
  if (!(k > 0.0)) throw std::domain_error("ScatteringState: k must be positive");
  return {k, free_energy(k, params)};
}

double ScatteringState::operator()(double x) const { return free_eigenfunction(k, x); }

double branch_beta(Branch branch) {
  return branch == Branch::First ? kBetaPlus : kBetaMinus;
}

KummerReduction KummerReduction::make(double beta, double eps, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("KummerReduction: lambda must be positive");
  return {beta, eps / (2.0 * lambda), beta + 1.5, lambda};
}

double free_eigenfunction(double k, double x) {
  if (!(k > 0.0)) throw std::domain_error("free_eigenfunction: k must be positive");
  if (x < 0.0) throw std::domain_error("free_eigenfunction: x must be >= 0");
  const double kx = k * x;
  return std::sqrt(kx) * specfun::bessel_j1(kx);
}

double free_energy(double k, const PhysicalParams& params) {
  if (!(k > 0.0)) throw std::domain_error("free_energy: k must be positive");
  return k * k * params.hbar * params.hbar / (2.0 * params.mass);
}

double ho_energy(int n, const PhysicalParams& params) {
  if (n < 0) throw std::domain_error("ho_energy: n must be >= 0");
  return 2.0 * (n + 1) * params.energy_scale();
}

double landau_integral(int n, int m, double gamma, double rate) {
  if (n < 0 || m < 0) throw std::domain_error("landau_integral: indices must be >= 0");
  if (!(gamma > 0.0) || !(rate > 0.0)) {
    throw std::domain_error("landau_integral: gamma and rate must be positive");
  }
  if (n != m) return 0.0;
  return 0.5 * specfun::gamma_fn(n + 1.0) * specfun::gamma_fn(gamma) /
         (std::pow(rate, gamma) * specfun::pochhammer(gamma, n));
}

namespace {

// Kummer c for the polynomial solution selected by the branch.
double branch_kummer_c(Branch branch, double beta) {
  return branch == Branch::First ? beta + 1.5 : 0.5 - beta;
}

void require_admissible(Branch branch, double beta) {
  if (beta != kBetaPlus && beta != kBetaMinus) {
    throw std::invalid_argument("beta must solve beta (beta + 1) = 3/4, got " +
                                std::to_string(beta));
  }
  const double c = branch_kummer_c(branch, beta);
  if (c <= 0.0 && c == std::floor(c)) {
    throw std::invalid_argument(
        "inadmissible branch/beta pair: Kummer parameter c = " + std::to_string(c) +
        " leaves 1F1 undefined");
  }
}

double require_lambda(const PhysicalParams& params) {
  params.validate();
  const double lambda = params.lambda();
  if (!(lambda > 0.0)) {
    throw std::domain_error("half oscillator requires omega > 0");
  }
  return lambda;
}

}  // namespace

double normalization_constant(int n, Branch branch, const PhysicalParams& params) {
  if (n < 0) throw std::domain_error("normalization_constant: n must be >= 0");
  const double lambda = require_lambda(params);
  const double beta = branch_beta(branch);
  const double gamma = branch_kummer_c(branch, beta);
  // phi^2 reduces to the Lemma integrand with exponent 2 gamma - 1 in both
  // conventions; the second branch carries an extra lambda^(-(beta+1/2)).
  const double inv = 1.0 / std::sqrt(landau_integral(n, n, gamma, lambda));
  if (branch == Branch::First) return inv;
  return std::pow(lambda, beta + 0.5) * inv;
}

double ho_eigenfunction(int n, Branch branch, const PhysicalParams& params, double x) {
  if (!(x > 0.0)) throw std::domain_error("ho_eigenfunction: x must be positive");
  const double lambda = require_lambda(params);
  const double beta = branch_beta(branch);
  const double y = lambda * x * x;
  const double damp = std::exp(-0.5 * y);
  const double norm = normalization_constant(n, branch, params);
  if (branch == Branch::First) {
    return norm * std::pow(x, beta + 1.0) * damp *
           specfun::kummer_1f1(KummerParams::polynomial(n, beta + 1.5), y);
  }
  return norm * std::pow(lambda, -(beta + 0.5)) * std::pow(x, -beta) * damp *
         specfun::kummer_1f1(KummerParams::polynomial(n, 0.5 - beta), y);
}

std::vector<double> quantization_energies(Branch branch, double beta, int count,
                                          const PhysicalParams& params) {
  require_admissible(branch, beta);
  if (count < 0) throw std::invalid_argument("quantization_energies: negative count");
  params.validate();
  std::vector<double> energies;
  energies.reserve(count);
  for (int n = 0; n < count; ++n) {
    // mu = E / (hbar omega); the chosen Kummer first parameter equals -n.
    const double mu = branch == Branch::First ? beta + 1.5 + 2.0 * n
                                              : -beta + 0.5 + 2.0 * n;
    energies.push_back(mu * params.energy_scale());
  }
  return energies;
}

double kummer_via_laguerre(int n, double y) {
  if (n < 0) throw std::domain_error("kummer_via_laguerre: n must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 - y;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 2.0 - y) * cur - (k + 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur / (n + 1.0);
}

AnalyticEigenstate::AnalyticEigenstate(int n, Branch branch, const PhysicalParams& params)
    : n_(n),
      branch_(branch),
      beta_(branch_beta(branch)),
      norm_constant_(normalization_constant(n, branch, params)),
      energy_(quantization_energies(branch, branch_beta(branch), n + 1, params).back()),
      params_(params) {}

double AnalyticEigenstate::operator()(double x) const {
  return ho_eigenfunction(n_, branch_, params_, x);
}

BoxedFreeState::BoxedFreeState(int n, double xmax)
    : k_(specfun::bessel_j1_zero(n + 1) / xmax), xmax_(xmax), scale_(1.0) {
  if (!(xmax > 0.0)) throw std::domain_error("BoxedFreeState: xmax must be positive");
  const auto rule = specfun::composite_gauss_legendre(0.0, xmax, xmax / (2.0 * (n + 1)), 24);
  const double norm2 = rule.integrate([&](double x) {
    const double v = free_eigenfunction(k_, x);
    return v * v;
  });
  scale_ = 1.0 / std::sqrt(norm2);
}

double BoxedFreeState::operator()(double x) const {
  if (x < 0.0 || x > xmax_) return 0.0;
  return scale_ * free_eigenfunction(k_, x);
}

}  // namespace affineqm::analytic
