#pragma once

#include <Eigen/Dense>

namespace ruc {

using Eigen::MatrixXcd;
using Eigen::VectorXd;

// Eigenvalues of a Hermitian matrix, ascending. LAPACK zheevd underneath.
VectorXd hermitian_eigenvalues(const MatrixXcd& a);

// Singular values, descending. Works for rectangular input.
VectorXd singular_values(const MatrixXcd& a);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-tol, 0) are clipped to zero; more negative values throw.
MatrixXcd hermitian_sqrt(const MatrixXcd& a, double tol = 1e-10);

// max_ij |(U^dagger U - I)_ij|
double unitarity_defect(const MatrixXcd& u);

}  // namespace ruc
