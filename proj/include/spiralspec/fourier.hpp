// SPDX-License-Identifier: Apache-2.0
//
// Periodic spectral utilities on uniform grids: differentiation matrices,
// DFT mode transforms, trigonometric interpolation, periodic antiderivatives.

#ifndef SPIRALSPEC_FOURIER_HPP
#define SPIRALSPEC_FOURIER_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace spiralspec::fourier {

using Complex = std::complex<double>;

/// Equispaced grid x_j = j*L/n on [0, L), n even.
Eigen::ArrayXd grid(int n, double length);

/// Dense spectral first-derivative matrix for L-periodic data, n even.
Eigen::MatrixXd diff1(int n, double length);

/// Dense spectral second-derivative matrix for L-periodic data, n even.
Eigen::MatrixXd diff2(int n, double length);

/// DFT coefficients c_m, m in FFT order {0,..,n/2-1,-n/2,..,-1}, such that
/// u_j = sum_m c_m exp(2*pi*i*m*x_j/L).
Eigen::VectorXcd dft(const Eigen::VectorXcd& u);
Eigen::VectorXcd idft(const Eigen::VectorXcd& c);

/// Signed integer frequency of coefficient slot k in FFT order.
int mode_of(int k, int n);

/// Evaluate the trigonometric interpolant of L-periodic samples at x.
Complex interp_point(const Eigen::VectorXcd& samples, double length, double x);
double interp_point(const Eigen::VectorXd& samples, double length, double x);

/// Resample L-periodic data onto an m-point grid (trigonometric interpolation).
Eigen::VectorXd resample(const Eigen::VectorXd& samples, int m);
Eigen::VectorXcd resample(const Eigen::VectorXcd& samples, int m);

/// Periodic mean of equispaced samples (spectrally accurate quadrature).
double mean(const Eigen::ArrayXd& samples);
Complex mean(const Eigen::ArrayXcd& samples);

/// Cumulative integral H(x_j) = int_0^{x_j} h, evaluated spectrally.
/// The mean of h contributes the linear (secular) part exactly.
Eigen::VectorXcd cumulative_integral(const Eigen::VectorXcd& h, double length);

/// Circular shift so that the sample with index `pivot` moves to index 0.
Eigen::VectorXd roll_to_front(const Eigen::VectorXd& samples, int pivot);

/// Trigonometric interpolant with cached DFT coefficients; O(n) per evaluation.
class TrigInterpolant {
public:
  TrigInterpolant() = default;
  TrigInterpolant(const Eigen::VectorXd& samples, double length);
  double operator()(double x) const;

private:
  double length_ = 1.0;
  Eigen::VectorXcd coeff_;
};

}  // namespace spiralspec::fourier

#endif
