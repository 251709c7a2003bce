#include "ruc/linalg.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace ruc {

VectorXd hermitian_eigenvalues(const MatrixXcd& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (a.cols() != n) throw std::invalid_argument("hermitian_eigenvalues: not square");
  MatrixXcd work = a;
  VectorXd w(n);
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'N', 'U', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n, w.data());
  if (info != 0)
    throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  return w;
}

VectorXd singular_values(const MatrixXcd& a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  MatrixXcd work = a;
  VectorXd s(std::min(m, n));
  const lapack_int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, 'N', m, n,
      reinterpret_cast<lapack_complex_double*>(work.data()), m, s.data(),
      nullptr, 1, nullptr, 1);
  if (info != 0)
    throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
  return s;
}

MatrixXcd hermitian_sqrt(const MatrixXcd& a, double tol) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (a.cols() != n) throw std::invalid_argument("hermitian_sqrt: not square");
  MatrixXcd vecs = a;
  VectorXd w(n);
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'V', 'U', n,
      reinterpret_cast<lapack_complex_double*>(vecs.data()), n, w.data());
  if (info != 0)
    throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  VectorXd root(n);
  for (lapack_int i = 0; i < n; ++i) {
    double lam = w(i);
    if (lam < 0.0) {
      if (lam < -tol)
        throw std::domain_error("hermitian_sqrt: eigenvalue " +
                                std::to_string(lam) + " below -tolerance");
      lam = 0.0;
    }
    root(i) = std::sqrt(lam);
  }
  return vecs * root.asDiagonal() * vecs.adjoint();
}

double unitarity_defect(const MatrixXcd& u) {
  const MatrixXcd g = u.adjoint() * u -
                      MatrixXcd::Identity(u.cols(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

}  // namespace ruc
