// SPDX-License-Identifier: Apache-2.0

#include "spiralspec/cusp.hpp"

#include <cmath>

#include "spiralspec/errors.hpp"
#include "spiralspec/fourier.hpp"

namespace spiralspec {

double gbar(const Eigen::ArrayXd& g2) {
  if (g2.size() == 0) throw ConfigError("gbar of empty sample array");
  return g2.mean();
}

double lambda2(const PeriodicCoefficients& coeffs) {
  return (coeffs.f2 * coeffs.g1).mean();
}

double lambda3(const PeriodicCoefficients& coeffs) {
  if (coeffs.g1.maxCoeff() - coeffs.g1.minCoeff() < 1e-13) return 0.0;
  const Eigen::MatrixXd d1 = fourier::diff1(coeffs.n, coeffs.length());
  Eigen::ArrayXd f2p = (d1 * coeffs.f2.matrix()).array();
  return (f2p * coeffs.g1).mean();
}

CuspExpansion make_expansion(const PeriodicCoefficients& coeffs, double omega0) {
  CuspExpansion e;
  e.gbar = gbar(coeffs.g2);
  e.lambda2 = lambda2(coeffs);
  e.lambda3 = lambda3(coeffs);
  e.kappa = coeffs.kappa;
  e.omega = coeffs.omega;
  e.omega0 = omega0;
  return e;
}

std::vector<Complex> cusp_points(const CuspExpansion& e, int n_lo, int n_hi) {
  std::vector<Complex> pts;
  for (int n = n_lo; n <= n_hi; ++n) pts.emplace_back(e.gbar, e.omega0 * n);
  return pts;
}

Complex predicted_dispersion(const CuspExpansion& e, double alpha) {
  return Complex(e.gbar + e.lambda2 * alpha * alpha,
                 2.0 * e.lambda3 * alpha * alpha * alpha);
}

EigenfunctionExpansion eigenfunction_expansion(const PeriodicCoefficients& coeffs,
                                               const CuspExpansion& e, double alpha) {
  const int n = coeffs.n;
  const double length = coeffs.length();
  const Eigen::MatrixXd d1 = fourier::diff1(n, length);
  Eigen::ArrayXd f2p = (d1 * coeffs.f2.matrix()).array();

  const Complex i(0.0, 1.0);
  const double a2 = alpha * alpha;
  const Complex a3 = 2.0 * i * alpha * alpha * alpha;

  EigenfunctionExpansion out;
  out.u = a2 * coeffs.f2.cast<Complex>() + a3 * f2p.cast<Complex>();

  // v2 = (lambda2*x - int_0^x f2*g1)/omega; the quadrature constants cancel
  // the secular drift so v stays periodic.
  Eigen::VectorXcd int2 =
      fourier::cumulative_integral((coeffs.f2 * coeffs.g1).cast<Complex>().matrix(),
                                   length);
  Eigen::VectorXcd int3 =
      fourier::cumulative_integral((f2p * coeffs.g1).cast<Complex>().matrix(), length);
  out.v.resize(n);
  for (int j = 0; j < n; ++j) {
    const double x = coeffs.x[j];
    const Complex v2 = (e.lambda2 * x - int2[j]) / e.omega;
    const Complex v3 = (e.lambda3 * x - int3[j]) / e.omega;
    out.v[j] = 1.0 + a2 * v2 + a3 * v3;
  }
  return out;
}

Theorem2Point theorem2_curve(const CuspExpansion& e, double s, double delta) {
  if (delta <= 0.0) throw ConfigError("theorem2_curve requires delta > 0");
  Theorem2Point p;
  p.s = s;
  p.delta = delta;
  p.alpha_star = 0.5 * (s + std::sqrt(s * s + 4.0 * std::sqrt(delta)));
  if (s >= 0.0)
    p.lambda_star = predicted_dispersion(e, std::abs(s));
  else
    p.lambda_star = Complex(e.gbar - s * s / e.omega, 0.0);
  return p;
}

Complex wavetrain_limit(const CuspExpansion& e, double alpha) {
  if (alpha == 0.0)
    throw NumericalError("wavetrain_limit undefined at alpha = 0");
  return predicted_dispersion(e, alpha) + Complex(0.0, e.omega / alpha);
}

namespace {

struct WindowPoint {
  double alpha;
  Complex dl;
};

std::vector<WindowPoint> window_points(const SpectralCurve& curve, Complex lambda0,
                                       double lo, double hi) {
  std::vector<WindowPoint> pts;
  for (size_t k = 0; k < curve.size(); ++k) {
    const double g = curve.gamma[k];
    if (g == 0.0) continue;
    const double alpha = 1.0 / std::abs(g);
    if (alpha >= lo && alpha <= hi)
      pts.push_back({alpha, curve.lambda[k] - lambda0});
  }
  return pts;
}

struct LineFit {
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  LineFit f;
  const double denom = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (size_t i = 0; i < n; ++i) {
    const double e = y[i] - (f.slope * x[i] + f.intercept);
    ss_res += e * e;
  }
  f.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

}  // namespace

ConvergenceFit fit_convergence_orders(const SpectralCurve& curve, Complex lambda0,
                                      double alpha_lo, double alpha_hi) {
  auto pts = window_points(curve, lambda0, alpha_lo, alpha_hi);
  if (pts.size() < 5)
    throw InsufficientDataError("fewer than 5 curve points in the alpha window");

  std::vector<double> la, lre, lim;
  for (const auto& p : pts) {
    const double re = std::abs(p.dl.real());
    const double im = std::abs(p.dl.imag());
    if (re <= 0.0 || im <= 0.0) continue;
    la.push_back(std::log(p.alpha));
    lre.push_back(std::log(re));
    lim.push_back(std::log(im));
  }
  if (la.size() < 5)
    throw InsufficientDataError("fewer than 5 usable points (zero deviations)");

  const LineFit fr = fit_line(la, lre);
  const LineFit fi = fit_line(la, lim);
  ConvergenceFit out;
  out.p_real = fr.slope;
  out.p_imag = fi.slope;
  out.r2_real = fr.r2;
  out.r2_imag = fi.r2;
  out.amp_real = std::exp(fr.intercept);
  out.amp_imag = std::exp(fi.intercept);
  out.n_points = static_cast<int>(la.size());
  return out;
}

ExpansionCoefficients fit_expansion_coefficients(const SpectralCurve& curve,
                                                 Complex lambda0, double alpha_lo,
                                                 double alpha_hi) {
  auto pts = window_points(curve, lambda0, alpha_lo, alpha_hi);
  if (pts.size() < 5)
    throw InsufficientDataError("fewer than 5 curve points in the alpha window");
  double n2 = 0, d2 = 0, n3 = 0, d3 = 0;
  for (const auto& p : pts) {
    const double a2 = p.alpha * p.alpha;
    const double a3 = a2 * p.alpha;
    n2 += p.dl.real() * a2;
    d2 += a2 * a2;
    n3 += p.dl.imag() * a3;
    d3 += a3 * a3;
  }
  ExpansionCoefficients out;
  out.c2 = n2 / d2;
  out.c3 = n3 / d3;
  out.n_points = static_cast<int>(pts.size());
  return out;
}

}  // namespace spiralspec
