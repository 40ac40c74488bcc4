#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

#include "affineqm/specfun.hpp"

using namespace affineqm::specfun;

namespace {

// Bessel's integral J_1(x) = (1/pi) int_0^pi cos(t - x sin t) dt. The
// integrand is smooth and 2 pi periodic, so the trapezoid rule converges
// geometrically once the panel count exceeds x.
double j1_integral_oracle(double x) {
  const int n = 64 + 2 * static_cast<int>(x);
  const double h = std::numbers::pi / n;
  double s = 0.5 * (std::cos(0.0) + std::cos(std::numbers::pi));
  for (int i = 1; i < n; ++i) {
    const double t = i * h;
    s += std::cos(t - x * std::sin(t));
  }
  return s * h / std::numbers::pi;
}

double bisect_oracle(double lo, double hi) {
  double flo = j1_integral_oracle(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = j1_integral_oracle(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Composite Simpson, independent of the Gauss-Legendre code under test.
template <class F>
double simpson(F f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("gamma_fn at integers is the exact factorial") {
  CHECK(gamma_fn(5.0) == 24.0);
  CHECK(gamma_fn(1.0) == 1.0);
  CHECK(gamma_fn(2.0) == 1.0);
  CHECK(gamma_fn(11.0) == 3628800.0);
}

TEST_CASE("gamma_fn(2.5) matches a quadrature of the Euler integral") {
  // t = u^2 turns int t^1.5 e^-t dt into int 2 u^4 e^(-u^2) du, smooth on [0, 10].
  const double oracle =
      simpson([](double u) { return 2.0 * std::pow(u, 4) * std::exp(-u * u); }, 0.0, 10.0, 20000);
  CHECK(oracle == doctest::Approx(0.75 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(gamma_fn(2.5) == doctest::Approx(oracle).epsilon(1e-13));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(gamma_fn(0.1) == doctest::Approx(9.5135076986687318).epsilon(1e-13));
}

TEST_CASE("gamma_fn rejects non-positive arguments") {
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(pochhammer(2.0, 0) == 1.0);
  for (int n = 0; n <= 12; ++n) CHECK(pochhammer(2.0, n) == gamma_fn(n + 2.0));
  SUBCASE("recurrence (g)_{n+1} = (g)_n (g + n)") {
    for (double g : {0.3, 1.0, 2.0, 3.7}) {
      for (int n = 0; n < 15; ++n) {
        CHECK(pochhammer(g, n + 1) == doctest::Approx(pochhammer(g, n) * (g + n)).epsilon(1e-15));
      }
    }
  }
  SUBCASE("ratio of gammas") {
    CHECK(pochhammer(2.5, 4) == doctest::Approx(gamma_fn(6.5) / gamma_fn(2.5)).epsilon(1e-13));
  }
}

TEST_CASE("bessel_j1 reference values") {
  CHECK(bessel_j1(0.0) == 0.0);
  // Extended-precision power series, 40 terms.
  long double term = 0.5L;
  long double sum = term;
  for (int k = 1; k < 40; ++k) {
    term *= -0.25L / (static_cast<long double>(k) * (k + 1));
    sum += term;
  }
  CHECK(bessel_j1(1.0) == doctest::Approx(static_cast<double>(sum)).epsilon(1e-15));
  CHECK(bessel_j1(1.0) == doctest::Approx(0.44005058574493352).epsilon(1e-15));
  CHECK(std::fabs(bessel_j1(3.8317059702)) < 1e-9);
  CHECK(bessel_j1(-2.0) == -bessel_j1(2.0));
}

TEST_CASE("bessel_j1 agrees with Bessel's integral across both branches") {
  double worst = 0.0;
  for (double x = 0.0; x <= 60.0; x += 0.01) {
    worst = std::max(worst, std::fabs(bessel_j1(x) - j1_integral_oracle(x)));
  }
  CHECK(worst < 1e-12);
  for (double x : {100.0, 237.5, 480.0, 1000.0}) {
    CHECK(std::fabs(bessel_j1(x) - j1_integral_oracle(x)) < 1e-12);
  }
}

TEST_CASE("series and asymptotic branches overlap around the crossover") {
  double worst = 0.0;
  for (double x = kJ1Crossover - 1.0; x <= kJ1Crossover + 1.0; x += 1e-3) {
    worst = std::max(worst, std::fabs(bessel_j1_series(x) - bessel_j1_asymptotic(x)));
  }
  CHECK(worst < 1e-10);
  CHECK(std::fabs(bessel_j1_series(kJ1Crossover) - bessel_j1_asymptotic(kJ1Crossover)) < 1e-12);
}

TEST_CASE("bessel_j1_zero") {
  CHECK(bessel_j1_zero(1) == doctest::Approx(bisect_oracle(3.0, 4.5)).epsilon(1e-13));
  CHECK(bessel_j1_zero(2) == doctest::Approx(bisect_oracle(6.5, 7.5)).epsilon(1e-13));
  CHECK(bessel_j1_zero(1) == doctest::Approx(3.8317059702075123).epsilon(1e-14));
  CHECK(bessel_j1_zero(2) == doctest::Approx(7.0155866698156188).epsilon(1e-14));
  for (int j = 1; j <= 40; ++j) CHECK(std::fabs(bessel_j1(bessel_j1_zero(j))) < 1e-13);
  SUBCASE("spacing tends to pi") {
    const double gap = bessel_j1_zero(200) - bessel_j1_zero(199);
    CHECK(gap == doctest::Approx(std::numbers::pi).epsilon(1e-5));
    double prev = std::fabs(bessel_j1_zero(2) - bessel_j1_zero(1) - std::numbers::pi);
    for (int j = 3; j < 30; ++j) {
      const double dev = std::fabs(bessel_j1_zero(j) - bessel_j1_zero(j - 1) - std::numbers::pi);
      CHECK(dev < prev);
      prev = dev;
    }
  }
  CHECK_THROWS_AS(bessel_j1_zero(0), std::domain_error);
}

TEST_CASE("kummer_1f1 terminating series") {
  CHECK(kummer_1f1(KummerParams::polynomial(0, 2.0), 7.3) == 1.0);
  CHECK(kummer_1f1(KummerParams::polynomial(1, 2.0), 2.0) == 0.0);
  // Term by term: 1 + (-2/2) y + (-2)(-1)/(2*3) y^2/2!.
  const double y = 1.0;
  const double direct = 1.0 + (-2.0 / 2.0) * y + (2.0 / 6.0) * y * y / 2.0;
  CHECK(direct == doctest::Approx(1.0 / 6.0));
  CHECK(kummer_1f1(KummerParams::polynomial(2, 2.0), 1.0) == doctest::Approx(direct).epsilon(1e-15));

  SUBCASE("term-by-term summation agrees for higher degree") {
    for (int n = 0; n <= 10; ++n) {
      for (double yy : {0.1, 1.0, 3.5, 9.0}) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 0; k < n; ++k) {
          term *= (-n + k) / ((2.0 + k) * (k + 1)) * yy;
          sum += term;
        }
        CHECK(kummer_1f1(KummerParams::polynomial(n, 2.0), yy) ==
              doctest::Approx(sum).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("kummer_1f1(-n, 2, .) has exactly n sign changes on (0, inf)") {
  for (int n = 0; n <= 10; ++n) {
    const auto p = KummerParams::polynomial(n, 2.0);
    int changes = 0;
    double prev = kummer_1f1(p, 1e-6);
    // All zeros of L_n^(1) lie below 4n + 6.
    for (double y = 1e-3; y < 4.0 * n + 10.0; y += 1e-3) {
      const double v = kummer_1f1(p, y);
      if ((v < 0) != (prev < 0)) ++changes;
      prev = v;
    }
    CHECK(changes == n);
  }
}

TEST_CASE("kummer_1f1 rejects unsupported parameters") {
  CHECK_THROWS_AS(kummer_1f1(KummerParams{-0.5, 2.0, false}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(kummer_1f1(KummerParams{-1.5, 2.0, true}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(kummer_1f1(KummerParams::polynomial(2, 0.0), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(kummer_1f1(KummerParams::polynomial(2, -1.0), 1.0), std::invalid_argument);
}

TEST_CASE("Gauss-Legendre two-point rule") {
  const auto rule = build_quadrature(QuadratureKind::GaussLegendre, 2, {-1.0, 1.0});
  REQUIRE(rule.size() == 2);
  CHECK(rule.nodes()[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rule.nodes()[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rule.weights()[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rule.weights()[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::fabs(rule.integrate([](double x) { return std::pow(x, 5); })) < 1e-15);
}

TEST_CASE("Gauss-Legendre integrates monomials up to degree 2n-1") {
  for (int n : {2, 3, 5, 8, 16, 33, 64, 128, 256, 512}) {
    const auto rule = build_quadrature(QuadratureKind::GaussLegendre, n, {0.0, 1.0});
    for (int i = 1; i < n; ++i) {
      REQUIRE(rule.nodes()[i] > rule.nodes()[i - 1]);
    }
    for (double w : rule.weights()) REQUIRE(w > 0.0);
    double worst = 0.0;
    for (int d = 0; d <= 2 * n - 1; ++d) {
      const double exact = 1.0 / (d + 1);
      const double q = rule.integrate([d](double x) { return std::pow(x, d); });
      worst = std::max(worst, std::fabs(q - exact) / exact);
    }
    CAPTURE(n);
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("mapped rule reproduces int_0^12 x^3 exp(-x^2) = 1/2") {
  const auto rule = build_quadrature(QuadratureKind::GaussLegendre, 64, {0.0, 12.0});
  const double q = rule.integrate([](double x) { return x * x * x * std::exp(-x * x); });
  CHECK(std::fabs(q - 0.5) < 1e-12);
}

TEST_CASE("truncated-uniform rule") {
  const auto rule = build_quadrature(QuadratureKind::TruncatedUniform, 1001, {0.0, 2.0});
  CHECK(rule.kind() == QuadratureKind::TruncatedUniform);
  for (std::size_t i = 1; i < rule.size(); ++i) CHECK(rule.nodes()[i] > rule.nodes()[i - 1]);
  for (double w : rule.weights()) CHECK(w > 0.0);
  CHECK(rule.integrate([](double x) { return x; }) == doctest::Approx(2.0).epsilon(1e-14));
  // Trapezoid error for x^2 is h^2 (b - a) f'' / 12.
  const double h = 2.0 / 1000;
  CHECK(rule.integrate([](double x) { return x * x; }) ==
        doctest::Approx(8.0 / 3.0 + h * h * 2.0 * 2.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("composite rule covers the interval exactly") {
  const auto rule = composite_gauss_legendre(0.0, 7.0, 2.0, 10);
  CHECK(rule.size() == 40);
  CHECK(rule.integrate([](double) { return 1.0; }) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(rule.integrate([](double x) { return std::sin(x); }) ==
        doctest::Approx(1.0 - std::cos(7.0)).epsilon(1e-13));
}

TEST_CASE("build_quadrature argument checks") {
  CHECK_THROWS_AS(build_quadrature(QuadratureKind::GaussLegendre, 1, {0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_quadrature(QuadratureKind::GaussLegendre, 513, {0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_quadrature(QuadratureKind::TruncatedUniform, 10, {1.0, 0.0}),
                  std::invalid_argument);
}
