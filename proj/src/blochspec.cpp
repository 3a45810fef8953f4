// SPDX-License-Identifier: Apache-2.0

#include "spiralspec/blochspec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "spiralspec/errors.hpp"
#include "spiralspec/fourier.hpp"
#include "spiralspec/linalg.hpp"

namespace spiralspec {

std::string frame_name(Frame f) {
  return f == Frame::wavetrain ? "wavetrain" : "spiral";
}

Eigen::MatrixXcd build_bloch_matrix(const PeriodicCoefficients& coeffs,
                                    double gamma, Frame frame) {
  coeffs.validate();
  const int n = coeffs.n;
  const double length = coeffs.length();
  const Eigen::MatrixXd d1 = fourier::diff1(n, length);
  const Eigen::MatrixXd d2 = fourier::diff2(n, length);
  const Complex i(0.0, 1.0);

  // (d/dx + i*gamma)^2 = d2 + 2i*gamma*d1 - gamma^2
  Eigen::MatrixXcd bloch2 = d2.cast<Complex>();
  bloch2 += (2.0 * i * gamma) * d1.cast<Complex>();
  bloch2 -= (gamma * gamma) * Eigen::MatrixXcd::Identity(n, n);

  Eigen::MatrixXcd drift = coeffs.omega * d1.cast<Complex>();
  if (frame == Frame::wavetrain)
    drift += (i * coeffs.omega * gamma) * Eigen::MatrixXcd::Identity(n, n);

  Eigen::MatrixXcd m(2 * n, 2 * n);
  m.block(0, 0, n, n) = bloch2 + drift;
  m.block(n, n, n, n) = coeffs.delta * bloch2 + drift;
  for (int j = 0; j < n; ++j) {
    m(j, j) += coeffs.f1[j];
    m(j, n + j) = coeffs.f2[j];
    m(n + j, j) = coeffs.g1[j];
    m(n + j, n + j) += coeffs.g2[j];
  }
  return m;
}

std::vector<Complex> eigenvalues_at(const PeriodicCoefficients& coeffs,
                                    double gamma, Frame frame) {
  Eigen::VectorXcd w = linalg::eigenvalues(build_bloch_matrix(coeffs, gamma, frame));
  std::vector<Complex> out(w.data(), w.data() + w.size());
  std::sort(out.begin(), out.end(),
            [](Complex a, Complex b) { return a.real() > b.real(); });
  return out;
}

namespace {

struct Nearest {
  Complex value;
  double dist;
  double second_dist;
};

Nearest nearest_to(const std::vector<Complex>& eigs, Complex target) {
  Nearest best{Complex(0, 0), 1e300, 1e300};
  for (Complex w : eigs) {
    const double d = std::abs(w - target);
    if (d < best.dist) {
      best.second_dist = best.dist;
      best.dist = d;
      best.value = w;
    } else if (d < best.second_dist) {
      best.second_dist = d;
    }
  }
  return best;
}

}  // namespace

SpectralCurve trace_branch(const PeriodicCoefficients& coeffs, Complex lambda_start,
                           double gamma_lo, double gamma_hi, double dgamma,
                           const TraceOptions& opts) {
  if (dgamma <= 0.0) throw ConfigError("dgamma must be positive");
  const double dir = (gamma_hi >= gamma_lo) ? 1.0 : -1.0;

  SpectralCurve curve;
  curve.frame = opts.frame;
  curve.delta = coeffs.delta;
  curve.kappa = coeffs.kappa;
  curve.omega = coeffs.omega;

  std::vector<Complex> eigs = eigenvalues_at(coeffs, gamma_lo, opts.frame);
  Nearest seed = nearest_to(eigs, lambda_start);
  const double match_tol = opts.jump_tol_rel * (1.0 + std::abs(lambda_start));
  if (seed.dist > match_tol)
    throw NumericalError("lambda_start is not within match tolerance of any "
                         "eigenvalue at gamma_lo");
  curve.gamma.push_back(gamma_lo);
  curve.lambda.push_back(seed.value);

  double gamma = gamma_lo;
  Complex lambda = seed.value;
  double step = dir * dgamma;
  const double span = std::abs(gamma_hi - gamma_lo);
  int halvings = 0;

  while (std::abs(gamma - gamma_lo) < span - 1e-12) {
    double h = step;
    if (dir > 0)
      h = std::min(h, gamma_hi - gamma);
    else
      h = std::max(h, gamma_hi - gamma);

    Complex pred = lambda;
    if (curve.size() >= 2) {
      const size_t k = curve.size() - 1;
      const double h_old = curve.gamma[k] - curve.gamma[k - 1];
      if (std::abs(h_old) > 0)
        pred = lambda + (curve.lambda[k] - curve.lambda[k - 1]) * (h / h_old);
    }

    eigs = eigenvalues_at(coeffs, gamma + h, opts.frame);
    Nearest cand = nearest_to(eigs, pred);
    const double scale = 1.0 + std::abs(pred);
    const bool tie = cand.second_dist < opts.tie_tol_rel * scale;
    const bool jump = std::abs(cand.value - lambda) > opts.jump_tol_rel * scale;

    if (tie || jump) {
      if (halvings >= opts.max_halvings) {
        if (tie)
          throw AmbiguityError(
              "two eigenvalues within tie tolerance of the branch predictor at "
              "gamma=" + std::to_string(gamma + h));
        throw NumericalError("branch tracking lost (persistent jump) at gamma=" +
                             std::to_string(gamma + h));
      }
      ++halvings;
      step *= 0.5;
      continue;
    }

    gamma += h;
    lambda = cand.value;
    curve.gamma.push_back(gamma);
    curve.lambda.push_back(lambda);
    if (halvings > 0 && std::abs(step) < dgamma) {
      step *= 2.0;
      --halvings;
    }
  }
  return curve;
}

SpectralCurve wavetrain_frame_curve(const PeriodicCoefficients& coeffs,
                                    Complex lambda_start, double gamma_lo,
                                    double gamma_hi, double dgamma,
                                    const TraceOptions& opts) {
  TraceOptions wt = opts;
  wt.frame = Frame::wavetrain;
  return trace_branch(coeffs, lambda_start, gamma_lo, gamma_hi, dgamma, wt);
}

SpectralCurve to_spiral_frame(const SpectralCurve& curve, double omega0, int ell) {
  SpectralCurve out = curve;
  const Complex shift(0.0, omega0 * ell);
  for (Complex& l : out.lambda) l += shift;
  out.frame = Frame::spiral;
  out.ell = ell;
  return out;
}

std::vector<SpectralCurve> delta_sweep(const KineticsModel& model,
                                       const std::vector<WaveTrain>& family,
                                       double gamma_lo, double gamma_hi,
                                       double dgamma, const TraceOptions& opts) {
  std::vector<SpectralCurve> curves;
  curves.reserve(family.size());
  for (const WaveTrain& wt : family) {
    KineticsModel m = model;
    m.delta = wt.delta;
    PeriodicCoefficients coeffs = sample_coefficients(m, wt);
    const double gbar = coeffs.g2.mean();
    // Seed on the branch passing through the lambda ~ gbar region.
    std::vector<Complex> eigs = eigenvalues_at(coeffs, gamma_lo, opts.frame);
    Nearest seed = nearest_to(eigs, Complex(gbar, 0.0));
    SpectralCurve c =
        trace_branch(coeffs, seed.value, gamma_lo, gamma_hi, dgamma, opts);
    c.delta = wt.delta;
    curves.push_back(std::move(c));
  }
  return curves;
}

void save_curve_csv(const std::string& path, const SpectralCurve& curve) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "gamma,re_lambda,im_lambda,ell,delta,frame\n";
  out.precision(17);
  for (size_t k = 0; k < curve.size(); ++k) {
    out << curve.gamma[k] << "," << curve.lambda[k].real() << ","
        << curve.lambda[k].imag() << "," << curve.ell << "," << curve.delta << ","
        << frame_name(curve.frame) << "\n";
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace spiralspec
