// Closed-form eigenstates of the affine free particle and the half harmonic
// oscillator.
//
// The half oscillator reduces to Kummer's equation through the ansatz
// phi(x) = x^(beta+1) exp(-lambda x^2 / 2) v(lambda x^2) with
// beta (beta + 1) = 3/4, i.e. beta = 1/2 or beta = -3/2. Requiring the Kummer
// series to terminate gives two quantization conditions; each admits exactly
// one beta, and both produce the same states with E_n = 2 (n + 1) hbar omega.

#pragma once

#include <vector>

#include "affineqm/model.hpp"

namespace affineqm::analytic {

/// Continuum state phi_k(x) = (k x)^(1/2) J_1(k x) of the free affine particle.
struct ScatteringState {
  double k;
  double energy;

  static ScatteringState make(double k, const PhysicalParams& params);
  double operator()(double x) const;
};

/// Which termination condition produced the state.
///   First:  (beta + 3/2)/2 - mu/2 = -n, admissible for beta = +1/2
///   Second: (1/2 - beta)/2 - mu/2 = -n, admissible for beta = -3/2
enum class Branch { First, Second };

inline constexpr double kBetaPlus = 0.5;
inline constexpr double kBetaMinus = -1.5;

/// The ansatz exponent admitted by each branch.
double branch_beta(Branch branch);

/// Kummer-equation data for a given ansatz exponent and energy:
/// mu = k^2 / (2 lambda), c = beta + 3/2, y = lambda x^2.
struct KummerReduction {
  double beta;
  double mu;
  double gamma_c;
  double lambda;

  static KummerReduction make(double beta, double eps, double lambda);
  /// First Kummer parameter of the regular solution, (beta + 3/2 - mu) / 2.
  double regular_a() const { return 0.5 * (beta + 1.5) - 0.5 * mu; }
  /// First Kummer parameter of the y^(-(beta+1/2)) solution.
  double irregular_a() const { return 0.5 * (-beta + 0.5) - 0.5 * mu; }
  double y(double x) const { return lambda * x * x; }
};

double free_eigenfunction(double k, double x);
double free_energy(double k, const PhysicalParams& params);

/// E_n = 2 (n + 1) hbar omega.
double ho_energy(int n, const PhysicalParams& params);

/// Integral over (0, inf) of x^(2 gamma - 1) exp(-rate x^2)
/// 1F1(-n; gamma; rate x^2) 1F1(-m; gamma; rate x^2), in closed form:
/// n! Gamma(gamma) / (2 rate^gamma (gamma)_n) when n == m, else 0.
double landau_integral(int n, int m, double gamma, double rate);

/// A_n (first branch) or B_n (second branch), derived from landau_integral
/// and the branch's prefactor convention.
double normalization_constant(int n, Branch branch, const PhysicalParams& params);

/// Half-oscillator eigenfunction assembled from the given branch. Throws
/// std::domain_error for x <= 0.
double ho_eigenfunction(int n, Branch branch, const PhysicalParams& params, double x);

/// First `count` energies allowed by the branch's termination condition.
/// Throws std::invalid_argument for an inadmissible (branch, beta) pair.
std::vector<double> quantization_energies(Branch branch, double beta, int count,
                                          const PhysicalParams& params = {});

/// 1F1(-n; 2; y) through the generalized Laguerre recurrence,
/// n! L_n^(1)(y) / (2)_n = L_n^(1)(y) / (n + 1). Independent of kummer_1f1.
double kummer_via_laguerre(int n, double y);

class AnalyticEigenstate {
 public:
  AnalyticEigenstate(int n, Branch branch, const PhysicalParams& params);

  int n() const { return n_; }
  Branch branch() const { return branch_; }
  double beta() const { return beta_; }
  double norm_constant() const { return norm_constant_; }
  double energy() const { return energy_; }
  /// Dimensionless eigenvalue 2 m E / hbar^2 = 4 lambda (n + 1).
  double eps() const { return params_.to_dimensionless(energy_); }

  double operator()(double x) const;

 private:
  int n_;
  Branch branch_;
  double beta_;
  double norm_constant_;
  double energy_;
  PhysicalParams params_;
};

/// Normalized eigenfunction of the free particle truncated at xmax with a
/// Dirichlet wall: phi_k with k = j_n / xmax, j_n the (n+1)-th zero of J_1.
class BoxedFreeState {
 public:
  BoxedFreeState(int n, double xmax);
  double k() const { return k_; }
  double eps() const { return k_ * k_; }
  double operator()(double x) const;

 private:
  double k_;
  double xmax_;
  double scale_;
};

}  // namespace affineqm::analytic
