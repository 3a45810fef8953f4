// SPDX-License-Identifier: Apache-2.0

#include "spiralspec/kinetics.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spiralspec/errors.hpp"
#include "spiralspec/wavetrain.hpp"

using namespace spiralspec;

TEST_CASE("barkley reaction values at rest and excited corners") {
  KineticsModel m = make_model("barkley");
  auto [f0, g0] = evaluate_kinetics(m, 0.0, 0.0);
  CHECK(f0 == 0.0);
  CHECK(g0 == 0.0);
  auto [f1, g1] = evaluate_kinetics(m, 1.0, 0.0);
  CHECK(f1 == 0.0);
  CHECK(g1 == 1.0);
}

TEST_CASE("karma reaction at the origin matches the closed form") {
  KineticsModel m = make_model("karma");
  auto [f, g] = evaluate_kinetics(m, 0.0, 0.0);
  CHECK(f == 0.0);
  const double theta = 0.5 * (1.0 + std::tanh(-4.0));
  const double expect = 4.0 * theta / (1.0 - std::exp(-1.2));
  CHECK(g == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("barkley jacobian rows") {
  KineticsModel m = make_model("barkley");
  Eigen::Matrix2d j = evaluate_jacobian(m, 0.0, 0.0);
  CHECK(j(1, 0) == 1.0);
  CHECK(j(1, 1) == -1.0);
  CHECK(j(0, 0) == doctest::Approx(-1.0 / 14.0).epsilon(1e-14));
}

TEST_CASE("karma g_v is identically -4") {
  KineticsModel m = make_model("karma");
  for (double u : {-1.0, 0.0, 0.7, 2.5})
    for (double v : {-0.5, 0.0, 1.3}) CHECK(evaluate_jacobian(m, u, v)(1, 1) == -4.0);
}

TEST_CASE("jacobians agree with central finite differences") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (const char* name : {"barkley", "karma"}) {
    KineticsModel m = make_model(name);
    auto f = [&](double u, double v) { return evaluate_kinetics(m, u, v); };
    for (int trial = 0; trial < 100; ++trial) {
      const double u = dist(rng), v = dist(rng);
      Eigen::Matrix2d ja = evaluate_jacobian(m, u, v);
      Eigen::Matrix2d jf = oracles::fd_jacobian(f, u, v, 1e-5);
      const double scale = std::max(1.0, ja.cwiseAbs().maxCoeff());
      CHECK((ja - jf).cwiseAbs().maxCoeff() / scale < 1e-6);
    }
  }
}

TEST_CASE("unknown model and unknown parameter are configuration errors") {
  CHECK_THROWS_AS(make_model("oregonator"), ConfigError);
  CHECK_THROWS_AS(make_model("barkley", {{"zeta", 1.0}}), ConfigError);
}

TEST_CASE("user-registered kinetics evaluate through the same API") {
  KineticsFunctions fns;
  fns.reaction = [](double u, double v, const std::map<std::string, double>& p) {
    const double a = p.at("a");
    return std::pair<double, double>{a * u - v, u};
  };
  register_model("linear_demo", fns, {{"a", 2.0}});
  KineticsModel m = make_model("linear_demo");
  auto [f, g] = evaluate_kinetics(m, 1.5, 0.5);
  CHECK(f == doctest::Approx(2.5));
  CHECK(g == doctest::Approx(1.5));
  // FD fallback Jacobian
  Eigen::Matrix2d j = evaluate_jacobian(m, 0.3, 0.1);
  CHECK(j(0, 0) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(j(0, 1) == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("sample_coefficients at the barkley rest state") {
  KineticsModel m = make_model("barkley");
  WaveTrain wt;
  wt.n = 16;
  wt.kappa = 1.0;
  wt.omega = 2.0;
  wt.u = Eigen::ArrayXd::Zero(16);
  wt.v = Eigen::ArrayXd::Zero(16);
  PeriodicCoefficients c = sample_coefficients(m, wt);
  // FD oracle at the rest state
  auto f = [&](double u, double v) { return evaluate_kinetics(m, u, v); };
  Eigen::Matrix2d j = oracles::fd_jacobian(f, 0.0, 0.0, 1e-6);
  CHECK(c.f1[0] == doctest::Approx(j(0, 0)).epsilon(1e-6));
  CHECK(c.f2[3] == doctest::Approx(j(0, 1)).epsilon(1e-6));
  CHECK((c.g1 - 1.0).abs().maxCoeff() == 0.0);
  CHECK((c.g2 + 1.0).abs().maxCoeff() == 0.0);
}

TEST_CASE("karma coefficients are d_u-normalized with g2 = -4 exactly") {
  KineticsModel m = make_model("karma");
  m.delta = 0.05;
  WaveTrain wt;
  wt.n = 16;
  wt.kappa = 2.0;
  wt.omega = 10.0;
  wt.u = Eigen::ArrayXd::LinSpaced(16, 0.0, 1.5);
  wt.v = Eigen::ArrayXd::Constant(16, 0.2);
  PeriodicCoefficients c = sample_coefficients(m, wt);
  CHECK((c.g2 + 4.0).abs().maxCoeff() == 0.0);
  const double root = std::sqrt(1.1);
  CHECK(c.kappa == doctest::Approx(2.0 * root).epsilon(1e-15));
  CHECK(c.omega == doctest::Approx(10.0 / root).epsilon(1e-15));
  CHECK(c.delta == doctest::Approx(0.05 / 1.1).epsilon(1e-15));
}

TEST_CASE("non-finite profiles are rejected") {
  KineticsModel m = make_model("barkley");
  WaveTrain wt;
  wt.n = 8;
  wt.kappa = 1.0;
  wt.omega = 1.0;
  wt.u = Eigen::ArrayXd::Zero(8);
  wt.v = Eigen::ArrayXd::Zero(8);
  wt.u[3] = std::nan("");
  CHECK_THROWS_AS(sample_coefficients(m, wt), NumericalError);
}
