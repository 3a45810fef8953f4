// SPDX-License-Identifier: Apache-2.0
//
// Thin LAPACK wrappers for the dense complex eigenproblems used throughout:
// standard (zgeev) and generalized (zggev) solves on Eigen matrices.

#ifndef SPIRALSPEC_LINALG_HPP
#define SPIRALSPEC_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace spiralspec::linalg {

using Complex = std::complex<double>;

/// All eigenvalues of a dense complex matrix (zgeev, eigenvalues only).
Eigen::VectorXcd eigenvalues(const Eigen::MatrixXcd& a);

struct EigenPairs {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd right;  // columns are right eigenvectors
  Eigen::MatrixXcd left;   // columns are left eigenvectors
};

/// Eigenvalues plus left/right eigenvectors (zgeev).
EigenPairs eigenpairs(const Eigen::MatrixXcd& a);

struct GeneralizedEigen {
  Eigen::VectorXcd alpha;
  Eigen::VectorXcd beta;  // eigenvalue = alpha/beta, infinite when beta ~ 0
};

/// Generalized eigenvalues of (A, B) via zggev.
GeneralizedEigen eigenvalues_generalized(const Eigen::MatrixXcd& a,
                                         const Eigen::MatrixXcd& b);

/// Finite generalized eigenvalues, filtering |beta| <= tol * |alpha|.
std::vector<Complex> finite_generalized_eigenvalues(const Eigen::MatrixXcd& a,
                                                    const Eigen::MatrixXcd& b,
                                                    double tol = 1e-10);

}  // namespace spiralspec::linalg

#endif
