// SPDX-License-Identifier: Apache-2.0

#include "spiralspec/wavetrain.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "spiralspec/errors.hpp"
#include "spiralspec/fourier.hpp"

using namespace spiralspec;

namespace {

// Shared converged Barkley wave train for the expensive cases.
const WaveTrain& barkley_train() {
  static WaveTrain wt = [] {
    KineticsModel m = make_model("barkley");
    m.delta = 0.2;
    const double kappa = 0.55;
    Profile seed = simulate_seed(m, kappa, 128, 60.0);
    WaveTrain coarse = solve(m, kappa, seed);
    Profile fine{fourier::resample(Eigen::VectorXd(coarse.u.matrix()), 256).array(),
                 fourier::resample(Eigen::VectorXd(coarse.v.matrix()), 256).array(), coarse.omega};
    return solve(m, kappa, fine);
  }();
  return wt;
}

}  // namespace

TEST_CASE("residual vanishes at kinetics equilibria") {
  KineticsModel m = make_model("barkley");
  Eigen::ArrayXd z = Eigen::ArrayXd::Zero(32);
  CHECK(residual(m, z, z, 1.7, 0.9) == doctest::Approx(0.0).epsilon(1e-14));
  Eigen::ArrayXd ones = Eigen::ArrayXd::Constant(32, 1.0);
  CHECK(residual(m, ones, ones, 0.4, 1.3) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("residual is positive on a non-solution") {
  KineticsModel m = make_model("barkley");
  std::mt19937 rng(99);
  std::normal_distribution<double> g(0.4, 0.2);
  Eigen::ArrayXd u(32), v(32);
  for (int j = 0; j < 32; ++j) {
    u[j] = g(rng);
    v[j] = g(rng);
  }
  CHECK(residual(m, u, v, 1.0, 1.0) > 1e-3);
}

TEST_CASE("constant seed is rejected as degenerate") {
  KineticsModel m = make_model("barkley");
  Profile seed;
  seed.u = Eigen::ArrayXd::Zero(32);
  seed.v = Eigen::ArrayXd::Zero(32);
  seed.omega_guess = 1.0;
  CHECK_THROWS_AS(solve(m, 1.0, seed), DegenerateSolutionError);
}

TEST_CASE("simulate_seed with t_end=0 returns the ignition profile") {
  KineticsModel m = make_model("barkley");
  Profile p = simulate_seed(m, 0.7, 64, 0.0);
  CHECK(p.u.size() == 64);
  CHECK(p.u.maxCoeff() > 0.5);
  CHECK(p.u.minCoeff() > -1e-12);
}

TEST_CASE("sub-threshold kinetics decay toward rest and the solve then fails") {
  // Scaling the excitability window shut: big b pushes the threshold above
  // the pulse, so the medium relaxes to rest.
  KineticsModel m = make_model("barkley", {{"b", 0.8}});
  Profile p = simulate_seed(m, 0.7, 64, 40.0);
  CHECK(p.u.maxCoeff() < 0.05);
  CHECK_THROWS_AS(solve(m, 0.7, p), NumericalError);
}

TEST_CASE("barkley delta=0.2 wave train converges from a simulated seed"
          * doctest::timeout(600)) {
  const WaveTrain& wt = barkley_train();
  CHECK(wt.residual_norm < 1e-8);
  CHECK(wt.omega > 0.0);
  // Independent residual evaluation
  KineticsModel m = make_model("barkley");
  m.delta = 0.2;
  CHECK(residual(m, wt.u, wt.v, wt.omega, wt.kappa) < 1e-8);

  SUBCASE("an exact discrete solution is a Newton fixed point") {
    Profile seed{wt.u, wt.v, wt.omega};
    WaveTrain again = solve(m, wt.kappa, seed);
    CHECK(again.residual_norm < 1e-10);
    CHECK(std::abs(again.omega - wt.omega) < 1e-9);
    CHECK((again.u - wt.u).abs().maxCoeff() < 1e-7);
  }

  SUBCASE("translation symmetry: rotated profiles still solve") {
    Eigen::VectorXd ur = fourier::roll_to_front(wt.u.matrix(), wt.n / 3);
    Eigen::VectorXd vr = fourier::roll_to_front(wt.v.matrix(), wt.n / 3);
    CHECK(residual(m, ur.array(), vr.array(), wt.omega, wt.kappa) < 1e-8);
  }

  SUBCASE("phase condition pins the representative") {
    // Solving again with the solution as its own phase anchor keeps the
    // anchor inner product at zero.
    Profile seed{wt.u, wt.v, wt.omega};
    WaveTrain again = solve(m, wt.kappa, seed);
    Eigen::MatrixXd d1 = fourier::diff1(wt.n, 2.0 * M_PI / wt.kappa);
    Eigen::VectorXd du = d1 * wt.u.matrix();
    Eigen::VectorXd dv = d1 * wt.v.matrix();
    double phase = (du.array() * (again.u - wt.u) + dv.array() * (again.v - wt.v))
                       .mean();
    CHECK(std::abs(phase) < 1e-10);
  }

  SUBCASE("spectral accuracy: doubling N moves omega by < 1e-6") {
    Profile fine{fourier::resample(Eigen::VectorXd(wt.u.matrix()), 512).array(),
                 fourier::resample(Eigen::VectorXd(wt.v.matrix()), 512).array(), wt.omega};
    WaveTrain wt2 = solve(m, wt.kappa, fine);
    CHECK(std::abs(wt2.omega - wt.omega) < 1e-6);
  }

  SUBCASE("continuation to delta=0 tracks a smooth family") {
    std::vector<double> targets;
    for (int k = 1; k <= 10; ++k) targets.push_back(0.2 - 0.02 * k);
    std::vector<WaveTrain> fam = continue_in_delta(m, wt, targets);
    CHECK(fam.size() == 10);
    for (const WaveTrain& member : fam) {
      KineticsModel md = m;
      md.delta = member.delta;
      CHECK(residual(md, member.u, member.v, member.omega, member.kappa) < 1e-8);
    }
    CHECK(fam.back().delta == doctest::Approx(0.0));
    // Smooth dependence: ||U(d_{i+1}) - U(d_i)|| <= C |d_{i+1} - d_i|,
    // C estimated from the first step and asserted within factor 10.
    auto diff_norm = [](const WaveTrain& a, const WaveTrain& b) {
      return std::max((a.u - b.u).abs().maxCoeff(), (a.v - b.v).abs().maxCoeff());
    };
    const double c0 = diff_norm(fam[0], wt) / 0.02;
    for (size_t i = 1; i < fam.size(); ++i) {
      const double c = diff_norm(fam[i], fam[i - 1]) / 0.02;
      CHECK(c < 10.0 * c0);
    }
  }

  SUBCASE("zero-length continuation re-converges in place") {
    std::vector<WaveTrain> fam = continue_in_delta(m, wt, {wt.delta});
    CHECK(fam.size() == 1);
    CHECK(std::abs(fam[0].omega - wt.omega) < 1e-9);
  }
}

TEST_CASE("profile CSV round trip") {
  Eigen::ArrayXd u = Eigen::ArrayXd::LinSpaced(16, 0.0, 1.0);
  Eigen::ArrayXd v = u * 0.5;
  const std::string path = "wavetrain_roundtrip_test.csv";
  save_profile_csv(path, 0.7, u, v);
  Profile p = load_profile_csv(path);
  CHECK(p.u.size() == 16);
  CHECK((p.u - u).abs().maxCoeff() < 1e-15);
  CHECK((p.v - v).abs().maxCoeff() < 1e-15);
  std::remove(path.c_str());
}
