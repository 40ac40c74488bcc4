#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "affineqm/verify.hpp"

using namespace affineqm;
using namespace affineqm::verify;

TEST_CASE("closure reconstruction converges with K") {
  const std::vector<double> ladder{10.0, 20.0, 30.0, 40.0};
  const auto r = closure_check(closure_bump, "bump", ladder);
  REQUIRE(r.error_curve.size() == 4);
  CHECK(r.kmax == 40.0);
  CHECK(r.nk == 20 * 24);
  CHECK(r.reconstruction_error == r.error_curve.back().second);
  CHECK(r.error_curve.front().second / r.error_curve.back().second >= 10.0);
  for (std::size_t i = 1; i < r.error_curve.size(); ++i) {
    const double prev = r.error_curve[i - 1].second;
    const double cur = r.error_curve[i].second;
    // Non-increasing until the curve hits round-off.
    CHECK((cur <= prev || prev < 1e-12));
  }

  SUBCASE("zero function reconstructs exactly") {
    const auto z = closure_check([](double) { return 0.0; }, "zero", ladder);
    for (const auto& [k, e] : z.error_curve) CHECK(e == 0.0);
  }
  SUBCASE("a wide bump converges but more slowly") {
    // Leaks into x = 0, where the truncated transform converges slowly.
    const auto wide =
        closure_check([](double x) { return std::exp(-(x - 3.0) * (x - 3.0)); }, "wide", ladder);
    CHECK(wide.error_curve.back().second < wide.error_curve.front().second);
  }
  SUBCASE("argument checks") {
    const std::vector<double> none;
    CHECK_THROWS_AS(closure_check(closure_bump, "x", none), std::invalid_argument);
    const std::vector<double> bad{0.0};
    CHECK_THROWS_AS(closure_check(closure_bump, "x", bad), std::invalid_argument);
    ClosureOptions touching;
    touching.window_lo = 0.0;
    CHECK_THROWS_AS(closure_check(closure_bump, "x", ladder, touching), std::invalid_argument);
  }
}

TEST_CASE("closure report serializes") {
  const std::vector<double> ladder{5.0, 10.0};
  const auto r = closure_check(closure_bump, "bump", ladder);
  const auto j = r.to_json();
  CHECK(j["test_function"] == "bump");
  CHECK(j["error_curve"].size() == 2);
  CHECK(j["window"][0] == 1.0);
  // Pure function of the inputs.
  CHECK(closure_check(closure_bump, "bump", ladder).to_json().dump() == j.dump());
}

TEST_CASE("orthonormality matrix") {
  const auto g = orthonormality_matrix(10, {});
  REQUIRE(g.size() == 11);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i][i] == doctest::Approx(1.0).epsilon(1e-8));
    for (std::size_t j = 0; j < g.size(); ++j) {
      CHECK(g[i][j] == g[j][i]);
      if (i != j) CHECK(std::fabs(g[i][j]) < 1e-8);
    }
  }
  CHECK(max_deviation_from_identity(g) < 1e-8);
  CHECK_THROWS_AS(orthonormality_matrix(21, {}), std::invalid_argument);
  CHECK_THROWS_AS(orthonormality_matrix(-1, {}), std::invalid_argument);

  SUBCASE("negative control: a truncated domain loses norm") {
    const auto short_rule = specfun::build_quadrature(specfun::QuadratureKind::GaussLegendre, 128,
                                                      {0.0, 1.5});
    CHECK(max_deviation_from_identity(orthonormality_matrix(3, {}, short_rule)) > 1e-2);
  }
  SUBCASE("serializes") { CHECK(to_json(orthonormality_matrix(1, {})).size() == 2); }
}

TEST_CASE("max_deviation_from_identity") {
  CHECK(max_deviation_from_identity({{1.0}}) == 0.0);
  CHECK(max_deviation_from_identity({{1.0, 0.25}, {-0.5, 1.0}}) == 0.5);
  CHECK(max_deviation_from_identity({{0.75, 0.0}, {0.0, 1.0}}) == 0.25);
}

TEST_CASE("residual reports serialize with nulls for missing orders") {
  const auto pot = SpikedPotential::half_oscillator({});
  const auto op = eigensolve::build_hamiltonian(pot, HalfLineGrid(12.0, 500));
  const auto spec = eigensolve::solve_spectrum(op, 2, true);
  const auto j = to_json(residual_report_numeric(op, spec));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["order"].is_null());
  CHECK(j[0]["residual"].is_number());

  const auto no_vectors = eigensolve::solve_spectrum(op, 2, false);
  CHECK_THROWS_AS(residual_report_numeric(op, no_vectors), std::invalid_argument);

  const auto a = to_json(residual_report_analytic({}, 3, HalfLineGrid(8.0, 999)));
  CHECK(a[2]["order"].is_number());
  CHECK(a.dump() == to_json(residual_report_analytic({}, 3, HalfLineGrid(8.0, 999))).dump());
}

TEST_CASE("commutator convergence study") {
  const std::vector<int> sizes{1000, 2000, 4000};
  const auto s = commutator_convergence(sizes, kCommutatorXmax, {});
  REQUIRE(s.orders.size() == 2);
  CHECK(s.residuals[1] < 1e-4);
  for (double o : s.orders) CHECK(o == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("count_sign_changes") {
  const std::vector<double> v{0.0, 1.0, 2.0, -1.0, -0.5, 0.0, 3.0};
  CHECK(count_sign_changes(v) == 2);
  const std::vector<double> noise{1.0, 1e-14, -1e-14, 1.0};
  CHECK(count_sign_changes(noise) == 0);
  CHECK(count_sign_changes(std::vector<double>{}) == 0);
  CHECK(count_sign_changes(std::vector<double>{0.0, 0.0}) == 0);
}
