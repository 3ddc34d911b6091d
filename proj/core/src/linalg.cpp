#include "orbitq/linalg.hpp"

#include <cmath>
#include <numbers>

#include "orbitq/errors.hpp"

namespace orbitq {

Matrix expm_antihermitian(const Matrix& A) {
  // -iA is Hermitian; symmetrize to shed roundoff before the solver.
  Matrix H = Cplx(0, -1) * A;
  H = ((H + H.adjoint()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  const auto& th = es.eigenvalues();
  Vector phase(th.size());
  for (Eigen::Index k = 0; k < th.size(); ++k)
    phase[k] = std::polar(1.0, th[k]);
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

Vector expm_antihermitian_column(const Matrix& A, Eigen::Index col) {
  Matrix H = Cplx(0, -1) * A;
  H = ((H + H.adjoint()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  Vector v = es.eigenvectors().adjoint().col(col).conjugate();  // V^H e_col
  for (Eigen::Index k = 0; k < v.size(); ++k)
    v[k] *= std::polar(1.0, es.eigenvalues()[k]);
  return es.eigenvectors() * v;
}

Matrix log_special_unitary(const Matrix& g) {
  const Eigen::Index n = g.rows();
  if (g.cols() != n) throw InvalidArgument("log_special_unitary: square matrix required");
  if ((g * g.adjoint() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("log_special_unitary: input is not unitary");

  // g is normal, so its Schur form is diagonal; the Schur basis is exactly
  // unitary, which keeps the log anti-Hermitian.
  Eigen::ComplexSchur<Matrix> schur(g);
  const Matrix& U = schur.matrixU();
  std::vector<double> theta(n);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    theta[k] = std::arg(schur.matrixT()(k, k));
    sum += theta[k];
  }
  // det g = 1 forces the phase sum onto 2*pi*Z; fold it to zero by moving one
  // eigenvalue to another branch (exp is unchanged).
  const double twopi = 2.0 * std::numbers::pi;
  const long wind = std::lround(sum / twopi);
  if (wind != 0) {
    auto it = (wind > 0) ? std::max_element(theta.begin(), theta.end())
                         : std::min_element(theta.begin(), theta.end());
    *it -= static_cast<double>(wind) * twopi;
  }

  Matrix lg = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) lg(k, k) = Cplx(0, theta[k]);
  Matrix out = U * lg * U.adjoint();
  out = ((out - out.adjoint()) / 2.0).eval();

  if ((expm_antihermitian(out) - g).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidArgument("log_special_unitary: exp(log g) failed to reproduce g; "
                          "input likely not special unitary");
  return out;
}

double frobenius_norm(const Matrix& A) { return A.norm(); }

double operator_norm(const Matrix& A) {
  if (A.rows() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(A);
  return svd.singularValues()[0];
}

double max_abs_dev_from_scalar(const Matrix& A, Cplx s) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      m = std::max(m, std::abs(A(i, j) - (i == j ? s : Cplx(0))));
  return m;
}

}  // namespace orbitq
