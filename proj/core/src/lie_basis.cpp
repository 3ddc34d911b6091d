#include "orbitq/lie_basis.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "orbitq/errors.hpp"

namespace orbitq {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double max_abs(const Matrix& M) { return M.cwiseAbs().maxCoeff(); }

// (j,k) span of a positive root from its simple-root coordinates: the root is
// e_j - e_k with j the first index whose coordinate is nonzero and k one past
// the last.
std::pair<int, int> span_of(const RootVec& root) {
  int j = 0;
  while (root.coords[static_cast<std::size_t>(j)] == 0) ++j;
  int k = static_cast<int>(root.coords.size());
  while (root.coords[static_cast<std::size_t>(k - 1)] == 0) --k;
  return {j, k};
}

}  // namespace

Matrix LieBasis::assemble(const Eigen::VectorXd& coeffs) const {
  if (coeffs.size() != dim())
    throw InvalidArgument("assemble: expected " + std::to_string(dim()) +
                          " coefficients, got " + std::to_string(coeffs.size()));
  Matrix M = Matrix::Zero(rs.n, rs.n);
  for (int i = 0; i < dim(); ++i)
    if (coeffs[i] != 0.0) M += coeffs[i] * elements[static_cast<std::size_t>(i)];
  return M;
}

Eigen::VectorXd LieBasis::decompose(const Matrix& M, double tol) const {
  if (M.rows() != rs.n || M.cols() != rs.n)
    throw InvalidArgument("decompose: matrix size does not match su(n)");
  const double scale = std::max(1.0, max_abs(M));
  if (max_abs(M + M.adjoint()) > tol * scale)
    throw InvalidArgument("decompose: matrix is not anti-Hermitian");
  if (std::abs(M.trace()) > tol * scale * rs.n)
    throw InvalidArgument("decompose: matrix is not traceless");

  Eigen::VectorXd out(dim());
  double running = 0.0;
  for (int j = 0; j < rs.rank; ++j) {
    running += M(j, j).imag();
    out[cartan_index(j)] = running;
  }
  for (std::size_t r = 0; r < root_spans.size(); ++r) {
    const auto [j, k] = root_spans[r];
    out[x_index(static_cast<int>(r))] = M(j, k).real() / kInvSqrt2;
    out[y_index(static_cast<int>(r))] = M(j, k).imag() / kInvSqrt2;
  }
  return out;
}

Vector LieBasis::decompose_complex(const Matrix& M, double tol) const {
  if (M.rows() != rs.n || M.cols() != rs.n)
    throw InvalidArgument("decompose_complex: matrix size does not match su(n)");
  const double scale = std::max(1.0, max_abs(M));
  if (std::abs(M.trace()) > tol * scale * rs.n)
    throw InvalidArgument("decompose_complex: matrix is not traceless");

  const Cplx mi(0.0, -1.0);
  Vector out(dim());
  Cplx running = 0.0;
  for (int j = 0; j < rs.rank; ++j) {
    running += mi * M(j, j);
    out[cartan_index(j)] = running;
  }
  for (std::size_t r = 0; r < root_spans.size(); ++r) {
    const auto [j, k] = root_spans[r];
    out[x_index(static_cast<int>(r))] = (M(j, k) - M(k, j)) * kInvSqrt2;
    out[y_index(static_cast<int>(r))] = mi * (M(j, k) + M(k, j)) * kInvSqrt2;
  }

  // Residual check catches matrices with an off-diagonal pattern outside the
  // complexified basis span (there are none for sl(n), so this is a pure
  // input-sanity guard on the closed form).
  Matrix R = Matrix::Zero(rs.n, rs.n);
  for (int i = 0; i < dim(); ++i) R += out[i] * elements[static_cast<std::size_t>(i)];
  if (max_abs(R - M) > tol * scale * rs.n)
    throw InvalidArgument("decompose_complex: residual exceeds tolerance");
  return out;
}

Eigen::VectorXd LieBasis::cartan_coefficients(const Matrix& M) const {
  Eigen::VectorXd out(rs.rank);
  double running = 0.0;
  for (int j = 0; j < rs.rank; ++j) {
    running += M(j, j).imag();
    out[j] = running;
  }
  return out;
}

Eigen::VectorXd LieBasis::bracket(const Eigen::VectorXd& u,
                                  const Eigen::VectorXd& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw InvalidArgument("bracket: coefficient size mismatch");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (v[j] == 0.0) continue;
      out += (u[i] * v[j]) * structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return out;
}

LieBasis build_lie_basis(const RootSystem& rs) {
  LieBasis b;
  b.rs = rs;
  const int n = rs.n;
  const Cplx I(0.0, 1.0);

  for (int j = 0; j < rs.rank; ++j) {
    Matrix H = Matrix::Zero(n, n);
    H(j, j) = I;
    H(j + 1, j + 1) = -I;
    b.elements.push_back(std::move(H));
    b.names.push_back("iH" + std::to_string(j + 1));
  }
  for (const auto& root : rs.positive_roots) {
    const auto [j, k] = span_of(root);
    b.root_spans.emplace_back(j, k);
    Matrix X = Matrix::Zero(n, n);
    X(j, k) = kInvSqrt2;
    X(k, j) = -kInvSqrt2;
    Matrix Y = Matrix::Zero(n, n);
    Y(j, k) = I * kInvSqrt2;
    Y(k, j) = I * kInvSqrt2;
    b.elements.push_back(std::move(X));
    b.elements.push_back(std::move(Y));
    const std::string span =
        "(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
    b.names.push_back("X" + span);
    b.names.push_back("Y" + span);
  }

  const int g = b.dim();
  b.structure.assign(static_cast<std::size_t>(g),
                     std::vector<Eigen::VectorXd>(
                         static_cast<std::size_t>(g), Eigen::VectorXd::Zero(g)));
  for (int i = 0; i < g; ++i) {
    for (int j = i + 1; j < g; ++j) {
      const Matrix C = b.elements[static_cast<std::size_t>(i)] *
                           b.elements[static_cast<std::size_t>(j)] -
                       b.elements[static_cast<std::size_t>(j)] *
                           b.elements[static_cast<std::size_t>(i)];
      Eigen::VectorXd c = b.decompose(C, 1e-12);
      // Snap to integers and half-integer multiples of sqrt(2); the structure
      // constants of this basis are all of that form and the snap keeps the
      // tensor exactly antisymmetric.
      for (int t = 0; t < g; ++t) {
        const double v = c[t];
        const double r2 = v * kInvSqrt2 * 2.0;  // v * sqrt(2)
        if (std::abs(v - std::round(v)) < 1e-9)
          c[t] = std::round(v);
        else if (std::abs(r2 - std::round(r2)) < 1e-9)
          c[t] = std::round(r2) / (kInvSqrt2 * 2.0);
      }
      b.structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
      b.structure[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -c;
    }
  }
  return b;
}

}  // namespace orbitq
