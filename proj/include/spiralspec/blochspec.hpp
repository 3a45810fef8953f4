// SPDX-License-Identifier: Apache-2.0
//
// Fourier-discretized Bloch operators and essential-spectrum branch tracing.
// The canonical operator uses the spiral drift form omega*d/dx (only the
// second-derivative term carries i*gamma); the wave-train frame adds the
// global i*omega*gamma shift via its own drift term omega*(d/dx + i*gamma).

#ifndef SPIRALSPEC_BLOCHSPEC_HPP
#define SPIRALSPEC_BLOCHSPEC_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spiralspec/kinetics.hpp"
#include "spiralspec/wavetrain.hpp"

namespace spiralspec {

using Complex = std::complex<double>;

enum class Frame { wavetrain, spiral };

std::string frame_name(Frame f);

struct SpectralCurve {
  std::vector<double> gamma;    // monotone along the march direction
  std::vector<Complex> lambda;
  int ell = 0;
  Frame frame = Frame::spiral;
  double delta = 0.0;  // metadata: which diffusion this curve belongs to
  double kappa = 0.0;
  double omega = 0.0;

  size_t size() const { return gamma.size(); }
};

/// 2N x 2N matrix of V -> diag(1,delta)(d/dx + i*gamma)^2 V + drift + coeffs.
Eigen::MatrixXcd build_bloch_matrix(const PeriodicCoefficients& coeffs,
                                    double gamma, Frame frame = Frame::spiral);

/// All 2N eigenvalues at a fixed Floquet parameter, sorted by descending
/// real part.
std::vector<Complex> eigenvalues_at(const PeriodicCoefficients& coeffs,
                                    double gamma, Frame frame = Frame::spiral);

struct TraceOptions {
  Frame frame = Frame::spiral;
  double jump_tol_rel = 0.1;   // jump threshold, scaled by (1+|lambda|)
  double tie_tol_rel = 1e-4;   // ambiguity threshold around the predictor
  int max_halvings = 10;
};

/// March gamma from lo to hi selecting the eigenvalue nearest a linear
/// extrapolation predictor; halves the step on jumps/ties, then reports
/// AmbiguityError rather than guessing.
SpectralCurve trace_branch(const PeriodicCoefficients& coeffs, Complex lambda_start,
                           double gamma_lo, double gamma_hi, double dgamma,
                           const TraceOptions& opts = {});

/// Same machinery with the wave-train drift omega*(d/dx + i*gamma); output
/// satisfies lambda_inf(gamma) = lambda_spiral(gamma) + i*omega*gamma.
SpectralCurve wavetrain_frame_curve(const PeriodicCoefficients& coeffs,
                                    Complex lambda_start, double gamma_lo,
                                    double gamma_hi, double dgamma,
                                    const TraceOptions& opts = {});

/// Vertical shift lambda -> lambda + i*omega0*ell (exact) with frame tagging.
SpectralCurve to_spiral_frame(const SpectralCurve& curve, double omega0, int ell);

/// One traced branch through the lambda ~ gbar region per family member.
std::vector<SpectralCurve> delta_sweep(const KineticsModel& model,
                                       const std::vector<WaveTrain>& family,
                                       double gamma_lo, double gamma_hi,
                                       double dgamma, const TraceOptions& opts = {});

/// Curve CSV schema: gamma, re_lambda, im_lambda, ell, delta, frame.
void save_curve_csv(const std::string& path, const SpectralCurve& curve);

}  // namespace spiralspec

#endif
