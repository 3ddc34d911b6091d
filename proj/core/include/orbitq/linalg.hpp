// linalg.hpp
//
// Small dense helpers shared by the representation and quadrature layers.
// Everything is specialized to the structured matrices that actually occur
// here: anti-Hermitian generators and (special) unitary group elements.

#ifndef ORBITQ_LINALG_HPP
#define ORBITQ_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace orbitq {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// exp(A) for anti-Hermitian A, through the eigendecomposition of the
// Hermitian matrix -iA.  Result is unitary to roundoff by construction.
Matrix expm_antihermitian(const Matrix& A);

// exp(A) * e_col without forming the full exponential.
Vector expm_antihermitian_column(const Matrix& A, Eigen::Index col);

// Principal logarithm of a special unitary matrix: anti-Hermitian, traceless,
// with exp(log) reproducing g to 1e-12 (checked, throws InvalidArgument on
// non-unitary input).  Eigenvalue phases are branch-shifted so they sum to
// zero, which keeps the result inside su(n).
Matrix log_special_unitary(const Matrix& g);

double frobenius_norm(const Matrix& A);

// Largest singular value, computed densely.
double operator_norm(const Matrix& A);

// max_ij |A_ij - (i==j ? s : 0)|
double max_abs_dev_from_scalar(const Matrix& A, Cplx s);

}  // namespace orbitq

#endif
