// Physical parameters, the spiked potential family, the half-line grid and
// the affine operator pair (x, d) acting on sampled wavefunctions.

#pragma once

#include <functional>
#include <vector>

namespace affineqm {

/// Mass, angular frequency and Planck constant. Spectra are computed in the
/// dimensionless form eps = 2 m E / hbar^2 and converted here.
struct PhysicalParams {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  /// Throws std::invalid_argument unless mass > 0, omega >= 0, hbar > 0.
  void validate() const;

  /// lambda = m omega / hbar.
  double lambda() const { return mass * omega / hbar; }
  double energy_scale() const { return hbar * omega; }

  double to_energy(double eps) const { return eps * hbar * hbar / (2.0 * mass); }
  double to_dimensionless(double energy) const {
    return 2.0 * mass * energy / (hbar * hbar);
  }
};

/// V(x) = alpha / (x + b)^2 + lambda2 x^2, defined for x > -b.
struct SpikedPotential {
  double alpha = 0.75;
  double lambda2 = 0.0;
  double b = 0.0;

  /// alpha = 3/4 is what affine quantization of p^2 / 2m produces.
  static constexpr double kAffineAlpha = 0.75;

  static SpikedPotential free_particle() { return {kAffineAlpha, 0.0, 0.0}; }
  static SpikedPotential half_oscillator(const PhysicalParams& params);
  static SpikedPotential shifted_oscillator(const PhysicalParams& params, double b);
};

/// Throws std::domain_error when x + b <= 0.
double eval_potential(const SpikedPotential& pot, double x);

/// Uniform interior nodes x_i = i h, i = 1..npoints, h = xmax / (npoints + 1).
/// Both endpoints carry implicit zero Dirichlet values.
class HalfLineGrid {
 public:
  HalfLineGrid(double xmax, int npoints);

  double xmax() const { return xmax_; }
  int size() const { return npoints_; }
  double spacing() const { return h_; }
  /// Zero-based: node(0) == h.
  double node(int i) const { return (i + 1) * h_; }
  std::vector<double> nodes() const;

  /// Same domain with the spacing halved (2 npoints + 1 nodes).
  HalfLineGrid refined() const { return HalfLineGrid(xmax_, 2 * npoints_ + 1); }

  bool operator==(const HalfLineGrid&) const = default;

 private:
  double xmax_;
  int npoints_;
  double h_;
};

struct Wavefunction {
  HalfLineGrid grid;
  std::vector<double> values;

  Wavefunction(HalfLineGrid g, std::vector<double> v);

  /// Trapezoidal L2 norm; the zero boundary values drop out so this is
  /// sqrt(h * sum psi_i^2).
  double norm() const;
  Wavefunction normalized() const;
};

/// A complex grid function kept as separate real and imaginary samples.
struct ComplexWavefunction {
  HalfLineGrid grid;
  std::vector<double> re;
  std::vector<double> im;

  double norm() const;
};

Wavefunction sample(const HalfLineGrid& grid, const std::function<double(double)>& f);

/// Unitary dilation (U(s) psi)(x) = e^{s/2} psi(e^s x). Off-grid values come
/// from a natural cubic spline through the samples and the zero endpoints;
/// points mapped beyond xmax are zero.
Wavefunction dilation_apply(const Wavefunction& psi, double s);

/// d psi = -i hbar (x psi' + psi / 2) with centered differences in the
/// interior and second-order one-sided stencils at the first and last node.
ComplexWavefunction dilation_generator_apply(const Wavefunction& psi,
                                             const PhysicalParams& params);

/// L2 norm of ([x, d] - i hbar x) psi built from the discrete operators.
/// Only meaningful for psi vanishing near both ends of the grid.
double commutator_residual(const Wavefunction& psi, const PhysicalParams& params);

/// Smooth test function for the commutator check:
/// x^2 (xmax - x)^2 exp(-(x - xmax/2)^2), scaled to unit L2 norm on the grid.
Wavefunction commutator_test_function(const HalfLineGrid& grid);

}  // namespace affineqm
