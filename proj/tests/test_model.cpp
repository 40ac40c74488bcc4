#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "affineqm/model.hpp"

using namespace affineqm;

namespace {

// Smooth, effectively compactly supported on (0, 8).
double bump(double x) { return x * x * std::exp(-2.0 * (x - 4.0) * (x - 4.0)); }

double sup_diff(const Wavefunction& a, const Wavefunction& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, std::fabs(a.values[i] - b.values[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("PhysicalParams derived quantities") {
  const PhysicalParams p{2.0, 3.0, 0.5};
  CHECK(p.lambda() == doctest::Approx(12.0));
  CHECK(p.energy_scale() == doctest::Approx(1.5));
  CHECK(p.to_energy(p.to_dimensionless(0.7)) == doctest::Approx(0.7));
  CHECK(PhysicalParams{}.to_energy(4.0) == 2.0);
  CHECK_THROWS_AS((PhysicalParams{0.0, 1.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PhysicalParams{1.0, -1.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PhysicalParams{1.0, 1.0, 0.0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((PhysicalParams{1.0, 0.0, 1.0}.validate()));
}

TEST_CASE("eval_potential") {
  CHECK(eval_potential({0.75, 0.0, 0.0}, 1.0) == 0.75);
  CHECK(eval_potential({0.75, 1.0, 0.0}, 1.0) == 1.75);
  CHECK(eval_potential({0.75, 1.0, 10.0}, 1.0) == doctest::Approx(3.0 / (4.0 * 121.0) + 1.0));
  CHECK(eval_potential({0.75, 1.0, 10.0}, 1.0) == doctest::Approx(1.006198).epsilon(1e-6));
  CHECK(eval_potential({0.75, 1.0, 2.0}, -1.5) == doctest::Approx(3.0 + 2.25));
  CHECK_THROWS_AS(eval_potential({0.75, 1.0, 0.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(eval_potential({0.75, 1.0, 1.0}, -1.0), std::domain_error);

  SUBCASE("half oscillator from physical parameters") {
    const auto pot = SpikedPotential::half_oscillator({1.0, 2.0, 1.0});
    CHECK(pot.alpha == 0.75);
    CHECK(pot.lambda2 == 4.0);
    CHECK(pot.b == 0.0);
  }
}

TEST_CASE("potential decreases with b for alpha > 0") {
  for (double x : {0.1, 0.5, 1.0, 3.0, 7.0}) {
    double prev = eval_potential({0.75, 1.0, 0.0}, x);
    for (double b = 0.25; b <= 20.0; b += 0.25) {
      const double v = eval_potential({0.75, 1.0, b}, x);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("HalfLineGrid never places a node on the singular point") {
  const HalfLineGrid g(12.0, 8000);
  CHECK(g.spacing() == doctest::Approx(12.0 / 8001.0));
  CHECK(g.node(0) == doctest::Approx(g.spacing()));
  CHECK(g.node(0) > 0.0);
  CHECK(g.node(g.size() - 1) == doctest::Approx(12.0 - g.spacing()));
  CHECK(g.refined().spacing() == doctest::Approx(g.spacing() / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(HalfLineGrid(12.0, 15), std::invalid_argument);
  CHECK_THROWS_AS(HalfLineGrid(-1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(Wavefunction(g, std::vector<double>(10)), std::invalid_argument);
}

TEST_CASE("dilation: identity, norm preservation and inverse") {
  const HalfLineGrid g(8.0, 4000);
  const auto psi = sample(g, bump);
  CHECK(sup_diff(dilation_apply(psi, 0.0), psi) == 0.0);
  for (double s : {-0.2, -0.1, 0.05, 0.1, 0.2}) {
    CAPTURE(s);
    const auto u = dilation_apply(psi, s);
    CHECK(std::fabs(u.norm() - psi.norm()) < 1e-4);
    CHECK(sup_diff(dilation_apply(u, -s), psi) < 1e-3);
  }
}

TEST_CASE("dilation matches the exact scaling for an analytic function") {
  const HalfLineGrid g(8.0, 2000);
  const auto psi = sample(g, bump);
  const double s = 0.15;
  const auto u = dilation_apply(psi, s);
  const auto exact = sample(g, [s](double x) { return std::exp(s / 2) * bump(std::exp(s) * x); });
  CHECK(sup_diff(u, exact) < 1e-6);
}

TEST_CASE("dilation generator on x exp(-x^2)") {
  const PhysicalParams p{1.0, 1.0, 0.7};
  const auto exact_im = [&](double x) {
    const double e = std::exp(-x * x);
    return -p.hbar * (x * (1.0 - 2.0 * x * x) * e + 0.5 * x * e);
  };
  auto error_on = [&](int n) {
    const HalfLineGrid g(6.0, n);
    const auto d = dilation_generator_apply(sample(g, [](double x) { return x * std::exp(-x * x); }), p);
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      CHECK(d.re[i] == 0.0);
      worst = std::max(worst, std::fabs(d.im[i] - exact_im(g.node(i))));
    }
    return worst;
  };
  const double coarse = error_on(999);
  const double fine = error_on(1999);
  CHECK(coarse < 1e-4);
  CHECK(std::log2(coarse / fine) == doctest::Approx(2.0).epsilon(0.1));

  SUBCASE("zero maps to zero") {
    const HalfLineGrid g(6.0, 100);
    const auto d = dilation_generator_apply(Wavefunction(g, std::vector<double>(100, 0.0)), p);
    for (double v : d.im) CHECK(v == 0.0);
  }
}

TEST_CASE("dilation generator is the derivative of the dilation group") {
  // d/ds U(s) psi at s = 0 equals (i/hbar) d psi = x psi' + psi/2.
  const PhysicalParams p{};
  const HalfLineGrid g(8.0, 4000);
  const auto psi = sample(g, bump);
  const auto d = dilation_generator_apply(psi, p);
  double scale = 0.0;
  for (double v : d.im) scale = std::max(scale, std::fabs(v));
  auto error_at = [&](double ds) {
    const auto plus = dilation_apply(psi, ds);
    const auto minus = dilation_apply(psi, -ds);
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      const double fd = (plus.values[i] - minus.values[i]) / (2.0 * ds);
      worst = std::max(worst, std::fabs(fd - (-d.im[i] / p.hbar)));
    }
    return worst / scale;
  };
  const double e1 = error_at(4e-3);
  const double e2 = error_at(2e-3);
  CHECK(e2 < 1e-3);
  // Central difference in s: error shrinks by ~4 when ds halves.
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("commutator residual decays at second order") {
  const PhysicalParams p{};
  const auto residual_at = [&](int n) {
    const HalfLineGrid g(6.0, n);
    return commutator_residual(commutator_test_function(g), p);
  };
  const double r1 = residual_at(1000);
  const double r2 = residual_at(2000);
  const double r4 = residual_at(4000);
  CHECK(r2 < 1e-4);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.1));
  CHECK(r2 / r4 == doctest::Approx(4.0).epsilon(0.1));

  SUBCASE("scales with hbar") {
    const HalfLineGrid g(6.0, 1000);
    const auto psi = commutator_test_function(g);
    CHECK(commutator_residual(psi, {1.0, 1.0, 3.0}) ==
          doctest::Approx(3.0 * commutator_residual(psi, p)).epsilon(1e-12));
  }
  SUBCASE("zero function") {
    const HalfLineGrid g(6.0, 100);
    CHECK(commutator_residual(Wavefunction(g, std::vector<double>(100, 0.0)), p) == 0.0);
  }
}
