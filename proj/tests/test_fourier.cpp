// SPDX-License-Identifier: Apache-2.0

#include "spiralspec/fourier.hpp"

#include <cmath>

#include "doctest.h"
#include "spiralspec/errors.hpp"

using namespace spiralspec;

TEST_CASE("spectral differentiation is exact on resolved trig modes") {
  const int n = 32;
  const double length = 2.0 * M_PI / 0.7;  // kappa = 0.7
  Eigen::ArrayXd x = fourier::grid(n, length);
  Eigen::MatrixXd d1 = fourier::diff1(n, length);
  Eigen::MatrixXd d2 = fourier::diff2(n, length);

  const double k = 3.0 * 2.0 * M_PI / length;
  Eigen::VectorXd f(n), fp(n), fpp(n);
  for (int j = 0; j < n; ++j) {
    f[j] = std::sin(k * x[j]) + 0.5 * std::cos(2.0 * k * x[j] / 3.0);
    fp[j] = k * std::cos(k * x[j]) - 0.5 * (2.0 * k / 3.0) * std::sin(2.0 * k * x[j] / 3.0);
    fpp[j] = -k * k * std::sin(k * x[j]) -
             0.5 * std::pow(2.0 * k / 3.0, 2) * std::cos(2.0 * k * x[j] / 3.0);
  }
  CHECK(((d1 * f) - fp).lpNorm<Eigen::Infinity>() < 1e-9);
  CHECK(((d2 * f) - fpp).lpNorm<Eigen::Infinity>() < 1e-8);
}

TEST_CASE("dft/idft round trip and interpolation") {
  const int n = 16;
  const double length = 5.0;
  Eigen::ArrayXd x = fourier::grid(n, length);
  Eigen::VectorXcd u(n);
  for (int j = 0; j < n; ++j)
    u[j] = std::complex<double>(std::sin(2.0 * M_PI * x[j] / length),
                                std::cos(4.0 * M_PI * x[j] / length));
  Eigen::VectorXcd back = fourier::idft(fourier::dft(u));
  CHECK((back - u).lpNorm<Eigen::Infinity>() < 1e-12);

  // Interpolation reproduces the underlying trig polynomial off-grid.
  const double xq = 0.3137 * length;
  std::complex<double> expect(std::sin(2.0 * M_PI * xq / length),
                              std::cos(4.0 * M_PI * xq / length));
  CHECK(std::abs(fourier::interp_point(u, length, xq) - expect) < 1e-12);
}

TEST_CASE("resampling preserves resolved content") {
  const int n = 32;
  const double length = 3.0;
  Eigen::ArrayXd x = fourier::grid(n, length);
  Eigen::VectorXd u(n);
  for (int j = 0; j < n; ++j) u[j] = std::exp(std::sin(2.0 * M_PI * x[j] / length));
  Eigen::VectorXd up = fourier::resample(u, 64);
  Eigen::ArrayXd x2 = fourier::grid(64, length);
  for (int j = 0; j < 64; j += 7)
    CHECK(up[j] == doctest::Approx(std::exp(std::sin(2.0 * M_PI * x2[j] / length)))
                       .epsilon(1e-9));
  // Downsample back
  Eigen::VectorXd down = fourier::resample(up, n);
  CHECK((down - u).lpNorm<Eigen::Infinity>() < 1e-9);
}

TEST_CASE("cumulative integral handles mean drift exactly") {
  const int n = 64;
  const double length = 2.0 * M_PI;
  Eigen::ArrayXd x = fourier::grid(n, length);
  Eigen::VectorXcd h(n);
  for (int j = 0; j < n; ++j) h[j] = -4.0 + std::sin(x[j]) * std::sin(x[j]);
  Eigen::VectorXcd ih = fourier::cumulative_integral(h, length);
  // int_0^x (-4 + sin^2) = -3.5 x - sin(2x)/4
  for (int j = 0; j < n; j += 5) {
    const double expect = -3.5 * x[j] - 0.25 * std::sin(2.0 * x[j]);
    CHECK(std::abs(ih[j] - expect) < 1e-12);
  }
}

TEST_CASE("odd grid sizes are rejected") {
  CHECK_THROWS_AS(fourier::grid(15, 1.0), ConfigError);
  CHECK_THROWS_AS(fourier::diff1(9, 1.0), ConfigError);
}
