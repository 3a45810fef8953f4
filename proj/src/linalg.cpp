// SPDX-License-Identifier: Apache-2.0

#include "spiralspec/linalg.hpp"

#include <lapacke.h>

#include "spiralspec/errors.hpp"

namespace spiralspec::linalg {

namespace {
lapack_complex_double* ptr(Eigen::MatrixXcd& m) {
  return reinterpret_cast<lapack_complex_double*>(m.data());
}
lapack_complex_double* ptr(Eigen::VectorXcd& v) {
  return reinterpret_cast<lapack_complex_double*>(v.data());
}
}  // namespace

Eigen::VectorXcd eigenvalues(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd work = a;
  Eigen::VectorXcd w(n);
  const int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, ptr(work), n,
                                 ptr(w), nullptr, 1, nullptr, 1);
  if (info != 0)
    throw NumericalError("zgeev failed with info=" + std::to_string(info) +
                         " (matrix order " + std::to_string(n) + ")");
  return w;
}

EigenPairs eigenpairs(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd work = a;
  EigenPairs out;
  out.values.resize(n);
  out.right.resize(n, n);
  out.left.resize(n, n);
  const int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'V', 'V', n, ptr(work), n, ptr(out.values),
                    ptr(out.left), n, ptr(out.right), n);
  if (info != 0)
    throw NumericalError("zgeev(V,V) failed with info=" + std::to_string(info));
  return out;
}

GeneralizedEigen eigenvalues_generalized(const Eigen::MatrixXcd& a,
                                         const Eigen::MatrixXcd& b) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd wa = a, wb = b;
  GeneralizedEigen out;
  out.alpha.resize(n);
  out.beta.resize(n);
  const int info =
      LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', n, ptr(wa), n, ptr(wb), n,
                    ptr(out.alpha), ptr(out.beta), nullptr, 1, nullptr, 1);
  if (info != 0)
    throw NumericalError("zggev failed with info=" + std::to_string(info) +
                         " (matrix order " + std::to_string(n) + ")");
  return out;
}

std::vector<Complex> finite_generalized_eigenvalues(const Eigen::MatrixXcd& a,
                                                    const Eigen::MatrixXcd& b,
                                                    double tol) {
  GeneralizedEigen ge = eigenvalues_generalized(a, b);
  std::vector<Complex> out;
  out.reserve(ge.alpha.size());
  for (int i = 0; i < ge.alpha.size(); ++i) {
    if (std::abs(ge.beta[i]) > tol * (1.0 + std::abs(ge.alpha[i])))
      out.push_back(ge.alpha[i] / ge.beta[i]);
  }
  return out;
}

}  // namespace spiralspec::linalg
