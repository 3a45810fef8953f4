// SPDX-License-Identifier: Apache-2.0

#include "spiralspec/fourier.hpp"

#include <cmath>

#include "spiralspec/errors.hpp"

namespace spiralspec::fourier {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void require_even(int n) {
  if (n < 2 || n % 2 != 0)
    throw ConfigError("grid size must be even and >= 2, got " + std::to_string(n));
}
}  // namespace

Eigen::ArrayXd grid(int n, double length) {
  require_even(n);
  Eigen::ArrayXd x(n);
  for (int j = 0; j < n; ++j) x[j] = length * j / n;
  return x;
}

// Standard periodic collocation formulas for even n (cotangent/cosecant
// stencils on the 2*pi grid, rescaled to period L).
Eigen::MatrixXd diff1(int n, double length) {
  require_even(n);
  const double h = 2.0 * kPi / n;
  const double scale = 2.0 * kPi / length;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int k = i - j;
      const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
      d(i, j) = scale * 0.5 * sgn / std::tan(0.5 * k * h);
    }
  return d;
}

Eigen::MatrixXd diff2(int n, double length) {
  require_even(n);
  const double h = 2.0 * kPi / n;
  const double scale = std::pow(2.0 * kPi / length, 2);
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        d(i, j) = -scale * (kPi * kPi / (3.0 * h * h) + 1.0 / 6.0);
      } else {
        const int k = i - j;
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        const double s = std::sin(0.5 * k * h);
        d(i, j) = -scale * sgn * 0.5 / (s * s);
      }
    }
  return d;
}

int mode_of(int k, int n) { return (k < n / 2) ? k : k - n; }

Eigen::VectorXcd dft(const Eigen::VectorXcd& u) {
  const int n = static_cast<int>(u.size());
  require_even(n);
  Eigen::VectorXcd c(n);
  for (int k = 0; k < n; ++k) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
      const double phase = -2.0 * kPi * k * j / n;
      acc += u[j] * Complex(std::cos(phase), std::sin(phase));
    }
    c[k] = acc / static_cast<double>(n);
  }
  return c;
}

Eigen::VectorXcd idft(const Eigen::VectorXcd& c) {
  const int n = static_cast<int>(c.size());
  require_even(n);
  Eigen::VectorXcd u(n);
  for (int j = 0; j < n; ++j) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const double phase = 2.0 * kPi * k * j / n;
      acc += c[k] * Complex(std::cos(phase), std::sin(phase));
    }
    u[j] = acc;
  }
  return u;
}

Complex interp_point(const Eigen::VectorXcd& samples, double length, double x) {
  const int n = static_cast<int>(samples.size());
  const Eigen::VectorXcd c = dft(samples);
  Complex acc(0.0, 0.0);
  for (int k = 0; k < n; ++k) {
    const int m = mode_of(k, n);
    const double phase = 2.0 * kPi * m * x / length;
    Complex term = c[k] * Complex(std::cos(phase), std::sin(phase));
    // Split the Nyquist mode symmetrically so real data interpolates real.
    if (m == -n / 2) term = c[k] * Complex(std::cos(phase), 0.0);
    acc += term;
  }
  return acc;
}

double interp_point(const Eigen::VectorXd& samples, double length, double x) {
  Eigen::VectorXcd z = samples.cast<Complex>();
  return interp_point(z, length, x).real();
}

Eigen::VectorXcd resample(const Eigen::VectorXcd& samples, int m) {
  const int n = static_cast<int>(samples.size());
  require_even(m);
  const Eigen::VectorXcd c = dft(samples);
  Eigen::VectorXcd cm = Eigen::VectorXcd::Zero(m);
  for (int k = 0; k < n; ++k) {
    const int mode = mode_of(k, n);
    if (mode >= -m / 2 && mode <= m / 2 - 1) {
      const int slot = (mode >= 0) ? mode : mode + m;
      cm[slot] += c[k];
    }
  }
  return idft(cm);
}

Eigen::VectorXd resample(const Eigen::VectorXd& samples, int m) {
  Eigen::VectorXcd z = samples.cast<Complex>();
  return resample(z, m).real();
}

double mean(const Eigen::ArrayXd& samples) {
  if (samples.size() == 0) throw ConfigError("mean of empty sample array");
  return samples.mean();
}

Complex mean(const Eigen::ArrayXcd& samples) {
  if (samples.size() == 0) throw ConfigError("mean of empty sample array");
  return samples.mean();
}

Eigen::VectorXcd cumulative_integral(const Eigen::VectorXcd& h, double length) {
  const int n = static_cast<int>(h.size());
  const Eigen::VectorXcd c = dft(h);
  Eigen::VectorXcd out(n);
  const Complex hbar = c[0];
  for (int j = 0; j < n; ++j) {
    const double x = length * j / n;
    Complex acc = hbar * x;
    for (int k = 1; k < n; ++k) {
      const int m = mode_of(k, n);
      const Complex iw(0.0, 2.0 * kPi * m / length);
      const double phase = 2.0 * kPi * m * x / length;
      acc += c[k] / iw * (Complex(std::cos(phase), std::sin(phase)) - 1.0);
    }
    out[j] = acc;
  }
  return out;
}

Eigen::VectorXd roll_to_front(const Eigen::VectorXd& samples, int pivot) {
  const int n = static_cast<int>(samples.size());
  Eigen::VectorXd out(n);
  for (int j = 0; j < n; ++j) out[j] = samples[(pivot + j) % n];
  return out;
}

TrigInterpolant::TrigInterpolant(const Eigen::VectorXd& samples, double length)
    : length_(length), coeff_(dft(samples.cast<Complex>())) {}

double TrigInterpolant::operator()(double x) const {
  const int n = static_cast<int>(coeff_.size());
  Complex acc(0.0, 0.0);
  for (int k = 0; k < n; ++k) {
    const int m = mode_of(k, n);
    const double phase = 2.0 * kPi * m * x / length_;
    if (m == -n / 2)
      acc += coeff_[k] * std::cos(phase);
    else
      acc += coeff_[k] * Complex(std::cos(phase), std::sin(phase));
  }
  return acc.real();
}

}  // namespace spiralspec::fourier
