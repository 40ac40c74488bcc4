#include "affineqm/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace affineqm {

void PhysicalParams::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("PhysicalParams: mass must be positive");
  }
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("PhysicalParams: omega must be non-negative");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("PhysicalParams: hbar must be positive");
  }
}

SpikedPotential SpikedPotential::half_oscillator(const PhysicalParams& params) {
  const double lambda = params.lambda();
  return {kAffineAlpha, lambda * lambda, 0.0};
}

SpikedPotential SpikedPotential::shifted_oscillator(const PhysicalParams& params,
                                                    double b) {
  if (!(b >= 0.0)) throw std::invalid_argument("shifted_oscillator: b must be >= 0");
  const double lambda = params.lambda();
  return {kAffineAlpha, lambda * lambda, b};
}

double eval_potential(const SpikedPotential& pot, double x) {
  const double u = x + pot.b;
  if (!(u > 0.0)) {
    throw std::domain_error("eval_potential: x + b must be positive, got " +
                            std::to_string(u));
  }
  return pot.alpha / (u * u) + pot.lambda2 * x * x;
}

HalfLineGrid::HalfLineGrid(double xmax, int npoints)
    : xmax_(xmax), npoints_(npoints), h_(xmax / (npoints + 1)) {
  if (!(xmax > 0.0) || !std::isfinite(xmax)) {
    throw std::invalid_argument("HalfLineGrid: xmax must be positive");
  }
  if (npoints < 16) throw std::invalid_argument("HalfLineGrid: need at least 16 nodes");
}

std::vector<double> HalfLineGrid::nodes() const {
  std::vector<double> x(npoints_);
  for (int i = 0; i < npoints_; ++i) x[i] = node(i);
  return x;
}

Wavefunction::Wavefunction(HalfLineGrid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.size()) {
    throw std::invalid_argument("Wavefunction: sample count does not match grid");
  }
}

double Wavefunction::norm() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return std::sqrt(grid.spacing() * s);
}

Wavefunction Wavefunction::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("Wavefunction: cannot normalize zero function");
  Wavefunction out = *this;
  for (double& v : out.values) v /= n;
  return out;
}

double ComplexWavefunction::norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < re.size(); ++i) s += re[i] * re[i] + im[i] * im[i];
  return std::sqrt(grid.spacing() * s);
}

Wavefunction sample(const HalfLineGrid& grid, const std::function<double(double)>& f) {
  std::vector<double> v(grid.size());
  for (int i = 0; i < grid.size(); ++i) v[i] = f(grid.node(i));
  return {grid, std::move(v)};
}

namespace {

// Natural cubic spline on the knots 0, h, ..., (n+1) h with zero end values.
class GridSpline {
 public:
  explicit GridSpline(const Wavefunction& psi)
      : h_(psi.grid.spacing()), xmax_(psi.grid.xmax()) {
    const int n = psi.grid.size();
    y_.assign(n + 2, 0.0);
    for (int i = 0; i < n; ++i) y_[i + 1] = psi.values[i];
    m_.assign(n + 2, 0.0);
    // M_{i-1} + 4 M_i + M_{i+1} = 6 (y_{i+1} - 2 y_i + y_{i-1}) / h^2 for
    // i = 1..n, M_0 = M_{n+1} = 0. Thomas sweep; the system is strictly
    // diagonally dominant.
    std::vector<double> c(n + 2, 0.0);
    std::vector<double> d(n + 2, 0.0);
    const double scale = 6.0 / (h_ * h_);
    for (int i = 1; i <= n; ++i) {
      const double rhs = scale * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]);
      const double denom = 4.0 - c[i - 1];
      c[i] = 1.0 / denom;
      d[i] = (rhs - d[i - 1]) / denom;
    }
    for (int i = n; i >= 1; --i) m_[i] = d[i] - c[i] * m_[i + 1];
  }

  double operator()(double t) const {
    if (t <= 0.0 || t >= xmax_) return 0.0;
    const int last = static_cast<int>(y_.size()) - 2;
    int j = static_cast<int>(t / h_);
    if (j > last) j = last;
    const double a = ((j + 1) * h_ - t) / h_;
    const double b = 1.0 - a;
    return a * y_[j] + b * y_[j + 1] +
           ((a * a * a - a) * m_[j] + (b * b * b - b) * m_[j + 1]) * h_ * h_ / 6.0;
  }

 private:
  double h_;
  double xmax_;
  std::vector<double> y_;
  std::vector<double> m_;
};

// psi' with centered differences inside and one-sided stencils at the ends.
std::vector<double> derivative(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> df(n);
  for (std::size_t i = 1; i + 1 < n; ++i) df[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  df[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  df[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return df;
}

// Imaginary part of d applied to a real or imaginary component:
// -hbar (x f' + f / 2).
std::vector<double> generator_component(const std::vector<double>& f,
                                        const HalfLineGrid& grid, double hbar) {
  const auto df = derivative(f, grid.spacing());
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = -hbar * (grid.node(static_cast<int>(i)) * df[i] + 0.5 * f[i]);
  }
  return out;
}

}  // namespace

Wavefunction dilation_apply(const Wavefunction& psi, double s) {
  if (s == 0.0) return psi;
  const GridSpline spline(psi);
  const double scale = std::exp(s);
  const double amp = std::exp(0.5 * s);
  std::vector<double> out(psi.grid.size());
  for (int i = 0; i < psi.grid.size(); ++i) {
    out[i] = amp * spline(scale * psi.grid.node(i));
  }
  return {psi.grid, std::move(out)};
}

ComplexWavefunction dilation_generator_apply(const Wavefunction& psi,
                                             const PhysicalParams& params) {
  // d psi for real psi is purely imaginary.
  return {psi.grid, std::vector<double>(psi.values.size(), 0.0),
          generator_component(psi.values, psi.grid, params.hbar)};
}

double commutator_residual(const Wavefunction& psi, const PhysicalParams& params) {
  const auto& grid = psi.grid;
  const std::size_t n = psi.values.size();
  // d psi = i g with g real, so x d psi = i x g.
  const auto g = generator_component(psi.values, grid, params.hbar);
  std::vector<double> xpsi(n);
  for (std::size_t i = 0; i < n; ++i) xpsi[i] = grid.node(static_cast<int>(i)) * psi.values[i];
  const auto gx = generator_component(xpsi, grid, params.hbar);
  // ([x, d] - i hbar x) psi = i (x g - gx - hbar x psi); the real part is 0.
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.node(static_cast<int>(i));
    const double r = x * g[i] - gx[i] - params.hbar * x * psi.values[i];
    s += r * r;
  }
  return std::sqrt(grid.spacing() * s);
}

Wavefunction commutator_test_function(const HalfLineGrid& grid) {
  const double xmax = grid.xmax();
  const double mid = 0.5 * xmax;
  auto psi = sample(grid, [&](double x) {
    const double w = x * (xmax - x);
    return w * w * std::exp(-(x - mid) * (x - mid));
  });
  return psi.normalized();
}

}  // namespace affineqm
