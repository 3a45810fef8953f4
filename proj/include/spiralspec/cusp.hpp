// SPDX-License-Identifier: Apache-2.0
//
// Cusp expansion of the rank-deficient (delta=0) dispersion curve near
// lambda = gbar: quadrature coefficients lambda2/lambda3, predicted curves,
// the (s,delta) parameterization for small positive diffusion, the
// wave-train limit, and convergence-order fits against traced spectra.

#ifndef SPIRALSPEC_CUSP_HPP
#define SPIRALSPEC_CUSP_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "spiralspec/blochspec.hpp"
#include "spiralspec/kinetics.hpp"

namespace spiralspec {

/// Period average of g2 samples (arithmetic mean; spectrally exact for
/// equispaced periodic sampling).
double gbar(const Eigen::ArrayXd& g2);

/// lambda2 = mean of f2*g1 over one period.
double lambda2(const PeriodicCoefficients& coeffs);

/// lambda3 = mean of f2'*g1 with spectral differentiation. Returns exactly
/// 0.0 when g1 is constant to machine precision (the constant-g1 case is
/// exact and downstream case classification branches on the sign).
double lambda3(const PeriodicCoefficients& coeffs);

struct CuspExpansion {
  double gbar = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double kappa = 0.0;
  double omega = 0.0;
  double omega0 = 0.0;
};

CuspExpansion make_expansion(const PeriodicCoefficients& coeffs, double omega0);

/// Cusp points gbar + i*omega0*n for n in [n_lo, n_hi].
std::vector<Complex> cusp_points(const CuspExpansion& e, int n_lo, int n_hi);

/// gbar + lambda2*alpha^2 + 2i*lambda3*alpha^3.
Complex predicted_dispersion(const CuspExpansion& e, double alpha);

/// Leading-order eigenfunction: u = alpha^2 f2 + 2i alpha^3 f2',
/// v = 1 + alpha^2 v2 + 2i alpha^3 v3 with v2, v3 by cumulative quadrature.
struct EigenfunctionExpansion {
  Eigen::ArrayXcd u, v;
};
EigenfunctionExpansion eigenfunction_expansion(const PeriodicCoefficients& coeffs,
                                               const CuspExpansion& e, double alpha);

struct Theorem2Point {
  double s = 0.0;
  double delta = 0.0;
  double alpha_star = 0.0;
  Complex lambda_star;
};

/// alpha*(s,delta) = (s + sqrt(s^2 + 4*sqrt(delta)))/2; lambda* follows the
/// two leading-order branches (the sqrt(delta) and delta^(1/4) remainders
/// are error budgets, not modeled terms).
Theorem2Point theorem2_curve(const CuspExpansion& e, double s, double delta);

/// Wave-train limit lambda_inf(alpha) = predicted_dispersion(alpha) + i*omega/alpha.
Complex wavetrain_limit(const CuspExpansion& e, double alpha);

struct ConvergenceFit {
  double p_real = 0.0, p_imag = 0.0;
  double r2_real = 0.0, r2_imag = 0.0;
  double amp_real = 0.0, amp_imag = 0.0;  // exp(intercept) of the log-log fits
  int n_points = 0;
};

/// Least-squares slopes of log|Re(lambda-lambda0)| and log|Im(lambda-lambda0)|
/// against log(alpha), alpha = 1/gamma, over the window [lo, hi].
ConvergenceFit fit_convergence_orders(const SpectralCurve& curve, Complex lambda0,
                                      double alpha_lo = 0.02, double alpha_hi = 0.2);

/// Monomial least-squares coefficients Re(dl) ~ c2*alpha^2, Im(dl) ~ c3*alpha^3
/// over the same window (used to compare against the quadrature values).
struct ExpansionCoefficients {
  double c2 = 0.0, c3 = 0.0;
  int n_points = 0;
};
ExpansionCoefficients fit_expansion_coefficients(const SpectralCurve& curve,
                                                 Complex lambda0, double alpha_lo,
                                                 double alpha_hi);

}  // namespace spiralspec

#endif
