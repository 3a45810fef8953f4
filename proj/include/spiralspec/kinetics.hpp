// SPDX-License-Identifier: Apache-2.0
//
// Two-component reaction kinetics: built-in Barkley and Karma models plus
// user-registered kinetics, reaction Jacobians, and sampling of the
// linearized coefficient functions along a wave train.

#ifndef SPIRALSPEC_KINETICS_HPP
#define SPIRALSPEC_KINETICS_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace spiralspec {

struct WaveTrain;  // wavetrain.hpp

/// f(u,v), g(u,v) and the 2x2 Jacobian [[f_u, f_v],[g_u, g_v]].
struct KineticsFunctions {
  std::function<std::pair<double, double>(double, double,
                                          const std::map<std::string, double>&)>
      reaction;
  /// Optional analytic Jacobian; central differences are used when absent.
  std::function<Eigen::Matrix2d(double, double,
                                const std::map<std::string, double>&)>
      jacobian;
};

struct KineticsModel {
  std::string name;
  std::map<std::string, double> params;
  double d_u = 1.0;    // u diffusion coefficient, > 0
  double delta = 0.0;  // v diffusion coefficient, >= 0
};

/// Construct a built-in or previously registered model. `overrides` replaces
/// individual default parameters; unknown names are rejected.
KineticsModel make_model(const std::string& name,
                         const std::map<std::string, double>& overrides = {},
                         double delta = 0.0);

/// Register user kinetics under `name` with default parameters and d_u.
void register_model(const std::string& name, KineticsFunctions fns,
                    std::map<std::string, double> default_params,
                    double default_d_u = 1.0);

bool is_known_model(const std::string& name);

std::pair<double, double> evaluate_kinetics(const KineticsModel& model, double u,
                                            double v);

Eigen::Matrix2d evaluate_jacobian(const KineticsModel& model, double u, double v);

/// Sampled linearization along a wave train. Space is normalized so the
/// u-diffusion is 1: kappa, omega, delta here are the rescaled values
/// (kappa*sqrt(d_u), omega/sqrt(d_u), delta/d_u).
struct PeriodicCoefficients {
  int n = 0;
  double kappa = 0.0;
  double omega = 0.0;
  double delta = 0.0;
  Eigen::ArrayXd x;   // n samples on [0, 2*pi/kappa)
  Eigen::ArrayXd f1, f2, g1, g2;
  double d_u_original = 1.0;

  double length() const { return x.size() ? 2.0 * 3.141592653589793238462643 / kappa : 0.0; }
  void validate() const;
};

PeriodicCoefficients sample_coefficients(const KineticsModel& model,
                                         const WaveTrain& wavetrain);

/// Assemble coefficients directly from closed-form samples (manufactured
/// systems and tests); performs the same validation as sample_coefficients.
PeriodicCoefficients make_coefficients(double kappa, double omega, double delta,
                                       const Eigen::ArrayXd& f1,
                                       const Eigen::ArrayXd& f2,
                                       const Eigen::ArrayXd& g1,
                                       const Eigen::ArrayXd& g2);

}  // namespace spiralspec

#endif
