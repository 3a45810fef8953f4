// SPDX-License-Identifier: Apache-2.0
// Scratch: reach short-wavelength Karma trains via continuation in kappa,
// then emit an N=256 seed profile for the acceptance configs.
#include <cstdio>
#include "spiralspec/wavetrain.hpp"
#include "spiralspec/fourier.hpp"
using namespace spiralspec;

static Profile down(const WaveTrain& w, int m) {
  return Profile{fourier::resample(Eigen::VectorXd(w.u.matrix()), m).array(),
                 fourier::resample(Eigen::VectorXd(w.v.matrix()), m).array(),
                 w.omega};
}

int main() {
  setvbuf(stdout, nullptr, _IONBF, 0);
  KineticsModel m = make_model("karma");
  m.delta = 0.1;
  const double kappa0 = 0.21;
  std::printf("simulating at kappa=%.3f ...\n", kappa0);
  Profile seed = simulate_seed(m, kappa0, 1024, 2.3);
  std::printf("sim: max u=%.3f speed=%.2f\n", seed.u.maxCoeff(), seed.omega_guess);
  WaveTrain wt = solve(m, kappa0, seed);
  std::printf("base: kappa=%.3f omega=%.4f omega0=%.3f res=%.2e\n", wt.kappa,
              wt.omega, wt.omega * wt.kappa, wt.residual_norm);

  auto fam1 = continue_in_kappa(m, wt, {0.3, 0.45, 0.65, 0.9});
  for (auto& w : fam1)
    std::printf("kappa=%.3f omega=%.4f omega0=%.3f res=%.2e\n", w.kappa, w.omega,
                w.omega * w.kappa, w.residual_norm);

  WaveTrain cur = solve(m, fam1.back().kappa, down(fam1.back(), 512));
  std::printf("[512] kappa=%.3f omega=%.4f res=%.2e\n", cur.kappa, cur.omega,
              cur.residual_norm);
  auto fam2 = continue_in_kappa(m, cur, {1.1, 1.3, 1.5});
  for (auto& w : fam2)
    std::printf("kappa=%.3f omega=%.4f omega0=%.3f res=%.2e u=[%.2f,%.2f]\n",
                w.kappa, w.omega, w.omega * w.kappa, w.residual_norm,
                w.u.minCoeff(), w.u.maxCoeff());

  WaveTrain fin = solve(m, fam2.back().kappa, down(fam2.back(), 256));
  std::printf("[256] kappa=%.3f omega=%.4f omega0=%.3f res=%.2e\n", fin.kappa,
              fin.omega, fin.omega * fin.kappa, fin.residual_norm);
  save_profile_csv("karma_seed_n256.csv", fin.kappa, fin.u, fin.v);
  std::printf("seed written; omega_guess=%.4f\n", fin.omega);
  return 0;
}
