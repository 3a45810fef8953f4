// SPDX-License-Identifier: Apache-2.0
//
// Asymptotic wave trains: Fourier-collocation Newton solve of
// D U_xx + omega U_x + F(U) = 0 on one period, with an integral phase
// condition, a time-stepping seed generator, and continuation in delta.

#ifndef SPIRALSPEC_WAVETRAIN_HPP
#define SPIRALSPEC_WAVETRAIN_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spiralspec/kinetics.hpp"

namespace spiralspec {

struct WaveTrain {
  int n = 0;
  Eigen::ArrayXd u, v;     // profile samples on one period [0, 2*pi/kappa)
  double kappa = 0.0;
  double omega = 0.0;
  double delta = 0.0;
  double residual_norm = 0.0;
};

struct Profile {
  Eigen::ArrayXd u, v;
  double omega_guess = 0.0;  // comoving speed estimate, > 0 when known
};

/// Max-norm of D U_xx + omega U_x + F(U) with spectral differentiation.
double residual(const KineticsModel& model, const Eigen::ArrayXd& u,
                const Eigen::ArrayXd& v, double omega, double kappa);

struct NewtonOptions {
  double tol = 1e-10;  // max-norm on the full residual
  int max_iter = 25;
  int max_damping = 8;  // line-search halvings per step
  bool trace = false;  // log per-iteration residuals to stderr
};

/// Newton solve for (u, v, omega) at prescribed kappa from a non-constant
/// seed profile. Throws DegenerateSolutionError for constant seeds/solutions
/// and NoConvergenceError (with the last residual) past max_iter.
WaveTrain solve(const KineticsModel& model, double kappa, const Profile& seed,
                const NewtonOptions& opts = {});

struct SimulateOptions {
  double dt_safety = 0.25;   // explicit-kinetics step fraction of 1/||J||
  double dt_max = 0.05;
  int check_every = 200;     // blow-up check cadence
  double pulse_amp = -1.0;   // ignition amplitude (model default when <= 0)
  double wake_amp = -1.0;    // recovery-wake amplitude behind the pulse
  double speed_guess = -1.0; // rough front speed for wake shaping/cleanup
};

/// Time-step the periodic 1D system from a localized pulse perturbation and
/// return the final frame shifted so max(u) sits at x=0, plus a comoving
/// speed estimate. Intended only as a Newton seed.
Profile simulate_seed(const KineticsModel& model, double kappa, int n,
                      double t_end, const SimulateOptions& opts = {});

struct ContinuationOptions {
  NewtonOptions newton;
  double min_step = 1e-6;
};

/// Secant-predictor / Newton-corrector continuation in delta at fixed kappa.
std::vector<WaveTrain> continue_in_delta(const KineticsModel& model,
                                         const WaveTrain& start,
                                         const std::vector<double>& delta_targets,
                                         const ContinuationOptions& opts = {});

/// Continuation in kappa at fixed delta (profiles live on the rescaled
/// period, so the grid is reused as kappa changes). Used to reach short
/// wavelengths that direct ring simulations cannot sustain.
std::vector<WaveTrain> continue_in_kappa(const KineticsModel& model,
                                         const WaveTrain& start,
                                         const std::vector<double>& kappa_targets,
                                         const ContinuationOptions& opts = {});

/// Profile CSV exchange (columns x,u,v with a header line).
void save_profile_csv(const std::string& path, double kappa,
                      const Eigen::ArrayXd& u, const Eigen::ArrayXd& v);
Profile load_profile_csv(const std::string& path);

}  // namespace spiralspec

#endif
