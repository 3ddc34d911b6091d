#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "orbitq/errors.hpp"
#include "orbitq/lie_basis.hpp"

using namespace orbitq;

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double dev(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Random anti-Hermitian traceless matrix with entries O(1).
Matrix random_su(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = Cplx(gauss(rng), gauss(rng));
  Matrix M = 0.5 * (A - A.adjoint());
  const Cplx shift = M.trace() / static_cast<double>(n);
  for (int i = 0; i < n; ++i) M(i, i) -= shift;
  return M;
}

}  // namespace

TEST_CASE("sl2 triple relations hold for every positive root") {
  for (int n = 2; n <= 5; ++n) {
    const auto b = build_lie_basis(build_root_system(n));
    for (std::size_t r = 0; r < b.root_spans.size(); ++r) {
      const auto [j, k] = b.root_spans[r];
      Matrix H = Matrix::Zero(n, n);
      H(j, j) = Cplx(0, 1);
      H(k, k) = Cplx(0, -1);  // iH_alpha for alpha = e_j - e_k
      const Matrix& X = b.elements[static_cast<std::size_t>(b.x_index(static_cast<int>(r)))];
      const Matrix& Y = b.elements[static_cast<std::size_t>(b.y_index(static_cast<int>(r)))];
      CHECK(dev(commutator(H, X), 2.0 * Y) < 1e-13);
      CHECK(dev(commutator(H, Y), -2.0 * X) < 1e-13);
      CHECK(dev(commutator(X, Y), H) < 1e-13);
      CHECK(X.norm() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(Y.norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("basis elements are anti-Hermitian and traceless") {
  const auto b = build_lie_basis(build_root_system(4));
  CHECK(b.dim() == 15);
  for (const auto& e : b.elements) {
    CHECK((e + e.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(e.trace()) < 1e-15);
  }
}

TEST_CASE("Gram matrix of -tr(ab): identity on root part, Cartan matrix on Cartan part") {
  for (int n = 2; n <= 4; ++n) {
    const auto rs = build_root_system(n);
    const auto b = build_lie_basis(rs);
    const int g = b.dim();
    Eigen::MatrixXd gram(g, g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        gram(i, j) = -(b.elements[static_cast<std::size_t>(i)] *
                       b.elements[static_cast<std::size_t>(j)])
                          .trace()
                          .real();
    // Cartan block: -tr(iH_a iH_b) = tr(H_a H_b) = Cartan matrix entries.
    for (int a = 0; a < rs.rank; ++a)
      for (int c = 0; c < rs.rank; ++c)
        CHECK(gram(a, c) == doctest::Approx(static_cast<double>(
                                rs.cartan[static_cast<std::size_t>(a)]
                                         [static_cast<std::size_t>(c)])));
    // Root block: orthonormal, and orthogonal to the Cartan block.
    for (int i = rs.rank; i < g; ++i)
      for (int j = 0; j < g; ++j)
        CHECK(std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)) < 1e-14);
  }
}

TEST_CASE("decompose inverts assemble on random elements") {
  std::mt19937_64 rng(20240817);
  for (int n = 2; n <= 4; ++n) {
    const auto b = build_lie_basis(build_root_system(n));
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix M = random_su(n, rng);
      const Eigen::VectorXd c = b.decompose(M);
      CHECK(dev(b.assemble(c), M) < 1e-13);

      Eigen::VectorXd raw(b.dim());
      for (int i = 0; i < b.dim(); ++i) raw[i] = std::cos(0.7 * i + trial);
      const Matrix A = b.assemble(raw);
      CHECK((b.decompose(A) - raw).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("decompose_complex handles non-anti-Hermitian traceless input") {
  std::mt19937_64 rng(7);
  const auto b = build_lie_basis(build_root_system(3));
  // General traceless complex matrix = su(3) + i su(3).
  const Matrix M = random_su(3, rng) + Cplx(0, 1) * random_su(3, rng);
  const Vector c = b.decompose_complex(M);
  Matrix R = Matrix::Zero(3, 3);
  for (int i = 0; i < b.dim(); ++i) R += c[i] * b.elements[static_cast<std::size_t>(i)];
  CHECK(dev(R, M) < 1e-13);
  // On anti-Hermitian input the complex coefficients are real and match.
  const Matrix A = random_su(3, rng);
  const Vector cc = b.decompose_complex(A);
  const Eigen::VectorXd cr = b.decompose(A);
  for (int i = 0; i < b.dim(); ++i) {
    CHECK(std::abs(cc[i].imag()) < 1e-13);
    CHECK(cc[i].real() == doctest::Approx(cr[i]).epsilon(1e-12));
  }
}

TEST_CASE("cartan_coefficients agrees with full decompose") {
  std::mt19937_64 rng(99);
  const auto b = build_lie_basis(build_root_system(4));
  const Matrix M = random_su(4, rng);
  const Eigen::VectorXd full = b.decompose(M);
  const Eigen::VectorXd cart = b.cartan_coefficients(M);
  for (int j = 0; j < b.rs.rank; ++j)
    CHECK(cart[j] == doctest::Approx(full[b.cartan_index(j)]).epsilon(1e-13));
}

TEST_CASE("decompose rejects bad input") {
  const auto b = build_lie_basis(build_root_system(3));
  Matrix H = Matrix::Zero(3, 3);
  H(0, 1) = 1.0;
  H(1, 0) = 1.0;  // Hermitian, not anti-Hermitian
  CHECK_THROWS_AS(b.decompose(H), InvalidArgument);
  Matrix T = Matrix::Identity(3, 3);  // nonzero trace
  CHECK_THROWS_AS(b.decompose(T), InvalidArgument);
  CHECK_THROWS_AS(b.decompose_complex(T), InvalidArgument);
}

TEST_CASE("structure tensor is antisymmetric and matches matrix brackets") {
  for (int n = 2; n <= 4; ++n) {
    const auto b = build_lie_basis(build_root_system(n));
    const int g = b.dim();
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        const auto& cij = b.structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const auto& cji = b.structure[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        CHECK((cij + cji).cwiseAbs().maxCoeff() == 0.0);
        const Matrix C = commutator(b.elements[static_cast<std::size_t>(i)],
                                    b.elements[static_cast<std::size_t>(j)]);
        CHECK(dev(b.assemble(cij), C) < 1e-12);
      }
  }
}

TEST_CASE("bracket of coefficient vectors matches matrix commutator") {
  std::mt19937_64 rng(4242);
  const auto b = build_lie_basis(build_root_system(4));
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix U = random_su(4, rng);
    const Matrix V = random_su(4, rng);
    const Eigen::VectorXd u = b.decompose(U);
    const Eigen::VectorXd v = b.decompose(V);
    const Eigen::VectorXd w = b.bracket(u, v);
    CHECK(dev(b.assemble(w), commutator(U, V)) < 1e-12);
  }
}

TEST_CASE("Jacobi identity on basis triples") {
  const auto b = build_lie_basis(build_root_system(3));
  const int g = b.dim();
  auto unit = [&](int i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(g);
    e[i] = 1.0;
    return e;
  };
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      for (int k = 0; k < g; ++k) {
        const Eigen::VectorXd s = b.bracket(unit(i), b.bracket(unit(j), unit(k))) +
                                  b.bracket(unit(j), b.bracket(unit(k), unit(i))) +
                                  b.bracket(unit(k), b.bracket(unit(i), unit(j)));
        CHECK(s.cwiseAbs().maxCoeff() < 1e-12);
      }
}
