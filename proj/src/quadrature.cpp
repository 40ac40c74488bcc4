#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "affineqm/specfun.hpp"

namespace affineqm::specfun {

QuadratureRule::QuadratureRule(QuadratureKind kind, std::vector<double> nodes,
                               std::vector<double> weights)
    : kind_(kind), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size() || nodes_.empty()) {
    throw std::invalid_argument("QuadratureRule: node/weight size mismatch");
  }
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(nodes_[i]);
  return sum;
}

namespace {

// Nodes and weights on (-1, 1) in increasing order.
void gauss_legendre_reference(int n, std::vector<double>& x,
                              std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi's initial estimate for the i-th largest root.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      // P_n'(z) from P_n and P_{n-1}.
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) <= 1e-15) {
        converged = true;
        break;
      }
    }
    assert(converged && "Gauss-Legendre Newton iteration failed");
    if (!converged) {
      throw std::runtime_error("build_quadrature: Newton iteration did not converge");
    }
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    x[n - 1 - i] = z;
    x[i] = -z;
    w[n - 1 - i] = weight;
    w[i] = weight;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
}

}  // namespace

QuadratureRule build_quadrature(QuadratureKind kind, int npoints,
                                std::pair<double, double> domain) {
  const auto [lo, hi] = domain;
  if (npoints < 2) throw std::invalid_argument("build_quadrature: npoints < 2");
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("build_quadrature: domain must be finite with lo < hi");
  }
  std::vector<double> nodes;
  std::vector<double> weights;
  if (kind == QuadratureKind::GaussLegendre) {
    if (npoints > 512) {
      throw std::invalid_argument("build_quadrature: Gauss-Legendre limited to 512 points");
    }
    gauss_legendre_reference(npoints, nodes, weights);
    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    for (int i = 0; i < npoints; ++i) {
      nodes[i] = mid + half * nodes[i];
      weights[i] *= half;
    }
  } else {
    const double h = (hi - lo) / (npoints - 1);
    nodes.resize(npoints);
    weights.assign(npoints, h);
    for (int i = 0; i < npoints; ++i) nodes[i] = lo + i * h;
    nodes.back() = hi;
    weights.front() = weights.back() = 0.5 * h;
  }
  return QuadratureRule(kind, std::move(nodes), std::move(weights));
}

QuadratureRule composite_gauss_legendre(double lo, double hi, double panel_width,
                                        int points_per_panel) {
  if (!(panel_width > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("composite_gauss_legendre: bad panel layout");
  }
  const auto base = build_quadrature(QuadratureKind::GaussLegendre,
                                     points_per_panel, {-1.0, 1.0});
  std::vector<double> nodes;
  std::vector<double> weights;
  const int panels = static_cast<int>(std::ceil((hi - lo) / panel_width - 1e-12));
  nodes.reserve(static_cast<std::size_t>(panels) * points_per_panel);
  weights.reserve(nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * panel_width;
    const double b = (p == panels - 1) ? hi : a + panel_width;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < base.size(); ++i) {
      nodes.push_back(mid + half * base.nodes()[i]);
      weights.push_back(half * base.weights()[i]);
    }
  }
  return QuadratureRule(QuadratureKind::GaussLegendre, std::move(nodes),
                        std::move(weights));
}

QuadratureRule halfline_rule(double xmax, int npoints) {
  return build_quadrature(QuadratureKind::GaussLegendre, npoints, {0.0, xmax});
}

}  // namespace affineqm::specfun
