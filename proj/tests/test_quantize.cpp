#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "orbitq/errors.hpp"
#include "orbitq/sections.hpp"

using namespace orbitq;

namespace {

WeightVec w(std::vector<std::int64_t> cs) {
  WeightVec out;
  for (auto c : cs) out.coords.push_back(Rat(c));
  return out;
}

OrbitSpec orbit(int n, std::vector<std::int64_t> cs) {
  const auto rs = build_root_system(n);
  return build_orbit(rs, build_lie_basis(rs), w(cs));
}

Eigen::VectorXd unit(int dim, int i) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
  e[i] = 1.0;
  return e;
}

}  // namespace

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
  std::vector<double> x, gw;
  gauss_legendre(5, x, gw);
  double mass = 0.0, x2 = 0.0, x8 = 0.0, x9 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mass += gw[i];
    x2 += gw[i] * x[i] * x[i];
    x8 += gw[i] * std::pow(x[i], 8);
    x9 += gw[i] * std::pow(x[i], 9);
  }
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(x8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));  // degree 8 <= 2*5-1
  CHECK(x9 == doctest::Approx(0.0).epsilon(1e-14));
  // known 2-point rule
  gauss_legendre(2, x, gw);
  CHECK(std::abs(x[0] + 1.0 / std::sqrt(3.0)) < 1e-14);
  CHECK(gw[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Euler-angle rule: mass, orthogonality to nontrivial irreps, Schur norm") {
  const auto rule = build_su2_quadrature(8);  // Schur self-test ran at build
  CHECK(rule.reported_mass == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(rule.samples.size() == 8 * 8 * 4);

  const auto rs = build_root_system(2);
  const auto basis = build_lie_basis(rs);
  const auto spin1 = build_irrep(basis, w({2}));

  // every matrix coefficient of a nontrivial irrep integrates to zero
  Matrix acc = Matrix::Zero(3, 3);
  for (std::size_t s = 0; s < rule.samples.size(); ++s)
    acc += rule.weights[s] * evaluate_group(spin1, basis, rule.samples[s]);
  CHECK(acc.cwiseAbs().maxCoeff() < 1e-12);

  // |<u, rho(g) v>|^2 integrates to |u|^2 |v|^2 / dim
  std::mt19937_64 rng(2);
  std::normal_distribution<double> gauss;
  Vector u(3), v(3);
  for (int i = 0; i < 3; ++i) {
    u[i] = Cplx(gauss(rng), gauss(rng));
    v[i] = Cplx(gauss(rng), gauss(rng));
  }
  double val = 0.0;
  for (std::size_t s = 0; s < rule.samples.size(); ++s) {
    const Cplx coeff = u.dot(evaluate_group(spin1, basis, rule.samples[s]) * v);
    val += rule.weights[s] * std::norm(coeff);
  }
  CHECK(val == doctest::Approx(u.squaredNorm() * v.squaredNorm() / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(build_su2_quadrature(1), InvalidArgument);
}

TEST_CASE("Haar Monte-Carlo sampling: determinism, group membership, moments") {
  const auto rule = build_haar_mc(3, 10000, 7);
  CHECK(rule.samples.size() == 10000);
  CHECK(rule.weights[0] == doctest::Approx(1e-4).epsilon(1e-15));
  CHECK(rule.n_blocks == 100);
  CHECK(rule.block_of(0) == 0);
  CHECK(rule.block_of(9999) == 99);

  const auto again = build_haar_mc(3, 10000, 7);
  for (std::size_t s = 0; s < 20; ++s)
    CHECK((rule.samples[s] - again.samples[s]).cwiseAbs().maxCoeff() == 0.0);
  const auto other = build_haar_mc(3, 10000, 8);
  CHECK((rule.samples[0] - other.samples[0]).cwiseAbs().maxCoeff() > 1e-3);

  for (std::size_t s = 0; s < 50; ++s) {
    const Matrix& g = rule.samples[s];
    CHECK((g.adjoint() * g - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(g.determinant() - Cplx(1, 0)) < 1e-12);
  }

  // defining matrix coefficients average to ~0 at the CLT scale
  Matrix mean = Matrix::Zero(3, 3);
  for (std::size_t s = 0; s < rule.samples.size(); ++s)
    mean += rule.weights[s] * rule.samples[s];
  CHECK(mean.cwiseAbs().maxCoeff() < 5.0 / std::sqrt(1e4));

  CHECK_THROWS_AS(build_haar_mc(3, 100, 7), InvalidArgument);
}

TEST_CASE("section spaces reproduce Weyl dimensions and the Schur gram") {
  const auto sphere = orbit(2, {2});
  const auto rule = build_su2_quadrature(2 * (2 * 2 + 2));
  const auto space = section_space(sphere, 2, rule);
  CHECK(space.dim() == 5);  // mk + 1
  CHECK(frobenius_norm(space.gram - Matrix::Identity(5, 5) / 5.0) <= 1e-10);
  CHECK(space.columns.size() == rule.theta.size() * static_cast<std::size_t>(rule.order));
  CHECK(space.gram_condition < 1.0 + 1e-8);

  const auto flag = orbit(3, {1, 1});
  const auto mc = build_haar_mc(3, 10000, 11);
  const auto flag_space = section_space(flag, 1, mc);
  CHECK(flag_space.dim() == 8);
  CHECK(frobenius_norm(flag_space.gram - Matrix::Identity(8, 8) / 8.0) < 0.05);
  CHECK(flag_space.n_blocks == 100);

  CHECK_THROWS_AS(section_space(flag, 1, rule), InvalidArgument);  // wrong group
}

TEST_CASE("Toeplitz compression: identity, Hermiticity, linearity, rank-1 law") {
  const auto sphere = orbit(2, {1});
  const auto rule = build_su2_quadrature(12);
  const auto space = section_space(sphere, 1, rule);
  const auto& basis = sphere.basis;

  const auto one = toeplitz(space, constant_function(basis, 1.0), rule);
  CHECK(frobenius_norm(one.matrix - Matrix::Identity(2, 2)) <= 1e-12);

  const WeightVec eta = space.level_spec.xi;
  for (int i = 0; i < 3; ++i) {
    const Matrix t = toeplitz(space, basis_moment(basis, i, eta), rule).matrix;
    CHECK(frobenius_norm(t - t.adjoint()) <= 1e-12);  // real symbol
  }

  // linear in the direction and in the target
  Eigen::VectorXd dir(3);
  dir << 0.3, -1.2, 0.7;
  const Matrix t_sum = toeplitz(space, direction_moment(basis, dir, eta), rule).matrix;
  Matrix t_parts = Matrix::Zero(2, 2);
  for (int i = 0; i < 3; ++i)
    t_parts += dir[i] * toeplitz(space, basis_moment(basis, i, eta), rule).matrix;
  CHECK(frobenius_norm(t_sum - t_parts) <= 1e-12);

  // T(f_{v, m xi}) = (mk/(mk+2)) i beta(v) on the sphere
  for (const auto& km : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 2}}) {
    const auto orb = orbit(2, {km.first});
    const int mk = km.first * km.second;
    const auto r = build_su2_quadrature(2 * (mk + 2));
    const auto sp = section_space(orb, km.second, r);
    const double ratio = static_cast<double>(mk) / (mk + 2);
    for (int i = 0; i < 3; ++i) {
      const Matrix t = toeplitz(sp, basis_moment(basis, i, sp.level_spec.xi), r).matrix;
      const Matrix want = ratio * Cplx(0, 1) * geom_rep_beta(sp, unit(3, i));
      CHECK(frobenius_norm(t - want) <= 1e-10);
    }
  }
}

TEST_CASE("fast-path Toeplitz agrees with a direct per-sample quadrature") {
  const auto sphere = orbit(2, {2});
  const auto rule = build_su2_quadrature(10);
  const auto space = section_space(sphere, 1, rule);
  const auto& basis = sphere.basis;
  const int d = space.dim();

  const OrbitFunction f = basis_moment(basis, 1, space.level_spec.karabegov_shift);
  Matrix gram = Matrix::Zero(d, d), a = Matrix::Zero(d, d);
  for (std::size_t s = 0; s < rule.samples.size(); ++s) {
    const Vector c = evaluate_group_column(space.rep, basis, rule.samples[s],
                                           space.rep.hw_index);
    const Matrix outer = rule.weights[s] * (c.conjugate() * c.transpose());
    gram += outer;
    a += eval_matrix_coefficient(f, basis, rule.samples[s]) * outer;
  }
  CHECK(frobenius_norm(gram - space.gram) <= 1e-13);
  const Matrix direct = gram.ldlt().solve(a);
  CHECK(frobenius_norm(direct - toeplitz(space, f, rule).matrix) <= 1e-11);

  // product path against the same brute force
  const OrbitFunction g2 = basis_moment(basis, 0, space.level_spec.xi);
  Matrix ap = Matrix::Zero(d, d);
  for (std::size_t s = 0; s < rule.samples.size(); ++s) {
    const Vector c = evaluate_group_column(space.rep, basis, rule.samples[s],
                                           space.rep.hw_index);
    ap += rule.weights[s] * eval_matrix_coefficient(f, basis, rule.samples[s]) *
          eval_matrix_coefficient(g2, basis, rule.samples[s]) *
          (c.conjugate() * c.transpose());
  }
  const Matrix direct_prod = gram.ldlt().solve(ap);
  CHECK(frobenius_norm(direct_prod - toeplitz_product(space, f, g2, rule).matrix) <= 1e-11);
}

TEST_CASE("singular gram from an under-resolved rule raises a conditioning error") {
  const auto sphere = orbit(2, {4});
  const auto rule = build_su2_quadrature(2);  // 4 x-samples vs dim 25 at m = 6
  const auto space = section_space(sphere, 6, rule);
  CHECK_THROWS_AS(
      toeplitz(space, constant_function(sphere.basis, 1.0), rule),
      ConditioningError);
}

TEST_CASE("the section representation is an anti-Hermitian homomorphism") {
  const auto sphere = orbit(2, {1});
  const auto rule = build_su2_quadrature(8);
  const auto space = section_space(sphere, 2, rule);
  const auto& basis = sphere.basis;
  const int gdim = basis.dim();

  CHECK(geom_rep_beta(space, Eigen::VectorXd::Zero(gdim)).cwiseAbs().maxCoeff() == 0.0);
  for (int i = 0; i < gdim; ++i) {
    const Matrix bi = geom_rep_beta(space, unit(gdim, i));
    CHECK(frobenius_norm(bi + bi.adjoint()) <= 1e-13);
    for (int j = 0; j < gdim; ++j) {
      const Matrix bj = geom_rep_beta(space, unit(gdim, j));
      const Matrix lhs = bi * bj - bj * bi;
      const Matrix rhs = geom_rep_beta(space, basis.bracket(unit(gdim, i), unit(gdim, j)));
      CHECK(frobenius_norm(lhs - rhs) <= 1e-12);
    }
  }

  // finite-difference oracle through the group action
  std::mt19937_64 rng(4);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(gdim);
  for (int i = 0; i < gdim; ++i) v[i] = gauss(rng);
  const double t = 1e-6;
  const Matrix g = expm_antihermitian(-t * basis.assemble(v));
  const Matrix fd = (evaluate_group(space.rep, basis, g).transpose() -
                     Matrix::Identity(space.dim(), space.dim())) /
                    t;
  CHECK(frobenius_norm(fd - geom_rep_beta(space, v)) <= 1e-5);
}

TEST_CASE("theorem verification on the sphere: exact with shift, 2/(mk+2) without") {
  const auto sphere = orbit(2, {1});
  const auto rule = build_su2_quadrature(12);

  const Report good = verify_theorem(sphere, 1, rule, 1e-8);
  CHECK(good.pass);
  CHECK(good.max_value <= 1e-10);
  CHECK(good.rows.size() == 3);
  CHECK(good.tolerance_mode == "absolute");

  const Report control = verify_theorem(sphere, 1, rule, 1e-8, ShiftMode::plain);
  CHECK_FALSE(control.pass);
  for (const auto& row : control.rows) {
    CHECK(row.scale > 0.0);
    CHECK(row.value / row.scale == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
  }

  // canonical bytes are identical across reruns once timing is normalized
  const Report again = verify_theorem(sphere, 1, rule, 1e-8);
  CHECK(normalize_timing(good.to_json()) == normalize_timing(again.to_json()));
  CHECK(normalize_timing(good.to_json()) != normalize_timing(control.to_json()));
}

TEST_CASE("bridging identity: beta + i T(f) - (i/2) T(Delta f) vanishes") {
  for (int k = 1; k <= 2; ++k) {
    const auto sphere = orbit(2, {k});
    for (int m = 1; m <= 2; ++m) {
      const auto rule = build_su2_quadrature(2 * (m * k + 2));
      const auto space = section_space(sphere, m, rule);
      const int gdim = sphere.basis.dim();
      for (int i = 0; i < gdim; ++i)
        CHECK(tuynman_check(space, unit(gdim, i), rule) <= 1e-10);
      CHECK(tuynman_check(space, Eigen::VectorXd::Zero(gdim), rule) == 0.0);
    }
  }
}

TEST_CASE("Monte-Carlo theorem verification passes at the noise scale") {
  const auto sphere = orbit(2, {1});
  const auto mc = build_haar_mc(2, 10000, 3);
  const Report rep = verify_theorem(sphere, 1, mc, 5.0);
  CHECK(rep.tolerance_mode == "se-multiple");
  for (const auto& row : rep.rows) {
    CHECK(row.se > 0.0);
    CHECK(row.value <= 5.0 * row.se);
  }
  CHECK(rep.pass);

  // the plain-shift defect is a genuine signal: far above the noise scale
  const Report control = verify_theorem(sphere, 1, mc, 5.0, ShiftMode::plain);
  CHECK_FALSE(control.pass);
  for (const auto& row : control.rows) CHECK(row.value > 20.0 * row.se);
}
