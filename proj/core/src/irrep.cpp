#include "orbitq/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "orbitq/errors.hpp"

namespace orbitq {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// Partition (p_1 >= ... >= p_n = 0) of a dominant integral weight:
// p_i = sum_{j >= i} lambda_j.
std::vector<std::int64_t> partition_of(const WeightVec& lambda, int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n), 0);
  std::int64_t acc = 0;
  for (int i = n - 2; i >= 0; --i) {
    const Rat& c = lambda.coords[static_cast<std::size_t>(i)];
    acc += c.numerator();
    p[static_cast<std::size_t>(i)] = acc;
  }
  return p;
}

void enumerate_rows(const std::vector<std::int64_t>& above,
                    std::vector<std::vector<std::int64_t>>& stack,
                    std::vector<GTPattern>& out) {
  const std::size_t len = above.size() - 1;
  if (len == 0) {
    GTPattern pat;
    pat.rows.assign(stack.rbegin(), stack.rend());
    out.push_back(std::move(pat));
    return;
  }
  std::vector<std::int64_t> row(len);
  // Depth-first over interlacing rows, lexicographically from the top value.
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == len) {
      stack.push_back(row);
      enumerate_rows(row, stack, out);
      stack.pop_back();
      return;
    }
    for (std::int64_t v = above[i]; v >= above[i + 1]; --v) {
      row[i] = v;
      fill(i + 1);
    }
  };
  fill(0);
}

std::vector<std::int64_t> flatten(const GTPattern& p) {
  std::vector<std::int64_t> key;
  for (const auto& row : p.rows) key.insert(key.end(), row.begin(), row.end());
  return key;
}

// Matrix element of the gl(n) raising operator E_{k,k+1} bumping entry j of
// row k (1-based row length k), with l_{i,k} = m_{i,k} - i.
double raising_coefficient(const GTPattern& pat, int k, int j) {
  auto l = [&](int row, int i) {
    return pat.rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(i - 1)] - i;
  };
  const std::int64_t ljk = l(k, j);
  double num = 1.0;
  for (int i = 1; i <= k + 1; ++i) num *= static_cast<double>(l(k + 1, i) - ljk);
  for (int i = 1; i <= k - 1; ++i) num *= static_cast<double>(l(k - 1, i) - ljk - 1);
  double den = 1.0;
  for (int i = 1; i <= k; ++i) {
    if (i == j) continue;
    const std::int64_t d = l(k, i) - ljk;
    den *= static_cast<double>(d) * static_cast<double>(d - 1);
  }
  return std::sqrt(std::abs(num / den));
}

void check_anti_hermitian(const Matrix& M, const char* what) {
  if ((M + M.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, M.cwiseAbs().maxCoeff()))
    throw std::logic_error(std::string("generator failed anti-Hermiticity: ") + what);
}

void check_homomorphism(const Irrep& rep, const LieBasis& basis) {
  const int g = basis.dim();
  const double d3 = std::pow(static_cast<double>(rep.dim), 3);
  std::vector<std::pair<int, int>> pairs;
  if (static_cast<double>(g) * g * d3 <= 2e8) {
    for (int i = 0; i < g; ++i)
      for (int j = i + 1; j < g; ++j) pairs.emplace_back(i, j);
  } else {
    // Bounded spot check for big spaces; the full sweep lives in the tests.
    const int budget = std::max(3, std::min(40, static_cast<int>(2e9 / d3)));
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, g - 1);
    for (int t = 0; t < budget; ++t) {
      const int i = pick(rng), j = pick(rng);
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  const double tol = 1e-12 * rep.dim;
  for (const auto& [i, j] : pairs) {
    const Matrix lhs = rep.gen[static_cast<std::size_t>(i)] * rep.gen[static_cast<std::size_t>(j)] -
                       rep.gen[static_cast<std::size_t>(j)] * rep.gen[static_cast<std::size_t>(i)];
    const Matrix rhs = rep.drho(basis.structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    if ((lhs - rhs).norm() > tol)
      throw std::logic_error("generator pair violates the bracket homomorphism");
  }
}

}  // namespace

Matrix Irrep::drho(const Eigen::VectorXd& v) const {
  if (v.size() != static_cast<Eigen::Index>(gen.size()))
    throw InvalidArgument("drho: coefficient count does not match the basis");
  Matrix M = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0.0) M += v[i] * gen[static_cast<std::size_t>(i)];
  return M;
}

Matrix Irrep::drho_complex(const Vector& v) const {
  if (v.size() != static_cast<Eigen::Index>(gen.size()))
    throw InvalidArgument("drho_complex: coefficient count does not match the basis");
  Matrix M = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != Cplx(0, 0)) M += v[i] * gen[static_cast<std::size_t>(i)];
  return M;
}

Irrep build_irrep(const LieBasis& basis, const WeightVec& lambda, int dim_cap) {
  const RootSystem& rs = basis.rs;
  const int n = rs.n;
  if (static_cast<int>(lambda.coords.size()) != rs.rank)
    throw InvalidArgument("build_irrep: weight has wrong rank");
  if (!is_dominant(lambda) || !is_integral(lambda))
    throw InvalidArgument("build_irrep: weight must be dominant integral");

  const std::int64_t d64 = weyl_dim(rs, lambda);
  if (d64 > dim_cap)
    throw ResourceLimitError("representation dimension " + std::to_string(d64) +
                             " exceeds cap " + std::to_string(dim_cap));
  const int d = static_cast<int>(d64);

  Irrep rep;
  rep.rs = rs;
  rep.highest = lambda;
  rep.dim = d;

  const auto partition = partition_of(lambda, n);
  std::vector<std::vector<std::int64_t>> stack{partition};
  enumerate_rows(partition, stack, rep.patterns);
  if (static_cast<int>(rep.patterns.size()) != d)
    throw std::logic_error("GT pattern count disagrees with the Weyl dimension");

  std::map<std::vector<std::int64_t>, int> index;
  for (int a = 0; a < d; ++a) index[flatten(rep.patterns[static_cast<std::size_t>(a)])] = a;

  // gl-weights: w_k = (sum of row k) - (sum of row k-1), rows 1-based.
  std::vector<std::vector<double>> glw(static_cast<std::size_t>(d),
                                       std::vector<double>(static_cast<std::size_t>(n)));
  for (int a = 0; a < d; ++a) {
    std::int64_t prev = 0;
    for (int k = 0; k < n; ++k) {
      std::int64_t s = 0;
      for (auto v : rep.patterns[static_cast<std::size_t>(a)].rows[static_cast<std::size_t>(k)]) s += v;
      glw[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] = static_cast<double>(s - prev);
      prev = s;
    }
    WeightVec w;
    for (int k = 0; k + 1 < n; ++k)
      w.coords.push_back(Rat(static_cast<std::int64_t>(
          glw[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] -
          glw[static_cast<std::size_t>(a)][static_cast<std::size_t>(k + 1)])));
    rep.weights.push_back(std::move(w));
  }

  // Highest-weight pattern: every row is the truncated partition.
  {
    GTPattern hw;
    for (int k = 1; k <= n; ++k)
      hw.rows.push_back(std::vector<std::int64_t>(partition.begin(), partition.begin() + k));
    rep.hw_index = index.at(flatten(hw));
  }

  // Elementary-matrix representations: diagonal, simple raising/lowering, then
  // iterated commutators for the long ones.
  std::vector<std::vector<Matrix>> E(static_cast<std::size_t>(n),
                                     std::vector<Matrix>(static_cast<std::size_t>(n)));
  for (int k = 0; k < n; ++k) {
    Matrix D = Matrix::Zero(d, d);
    for (int a = 0; a < d; ++a) D(a, a) = glw[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
    E[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = std::move(D);
  }
  for (int k = 1; k <= n - 1; ++k) {  // E_{k,k+1}, acting on GT row k
    Matrix up = Matrix::Zero(d, d);
    for (int a = 0; a < d; ++a) {
      const GTPattern& pat = rep.patterns[static_cast<std::size_t>(a)];
      for (int j = 1; j <= k; ++j) {
        const std::int64_t v = pat.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
        // Bump validity against the neighbouring rows.
        if (v + 1 > pat.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - 1)]) continue;
        if (j >= 2 && k >= 2 &&
            pat.rows[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(j - 2)] < v + 1)
          continue;
        GTPattern bumped = pat;
        bumped.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] += 1;
        const double c = raising_coefficient(pat, k, j);
        up(index.at(flatten(bumped)), a) += c;
      }
    }
    E[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k)] = up;
    E[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - 1)] = up.adjoint();
  }
  for (int span = 2; span <= n - 1; ++span) {
    for (int j = 0; j + span < n; ++j) {
      const int k = j + span;
      auto& Ejk = E[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      auto& Ekj = E[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      const auto& a1 = E[static_cast<std::size_t>(j)][static_cast<std::size_t>(j + 1)];
      const auto& a2 = E[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(k)];
      Ejk = a1 * a2 - a2 * a1;
      const auto& b1 = E[static_cast<std::size_t>(k)][static_cast<std::size_t>(j + 1)];
      const auto& b2 = E[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(j)];
      Ekj = b1 * b2 - b2 * b1;
      if ((Ekj - Ejk.adjoint()).cwiseAbs().maxCoeff() >
          1e-12 * std::max(1.0, Ejk.cwiseAbs().maxCoeff()))
        throw std::logic_error("elementary matrices lost the adjoint pairing");
    }
  }

  const Cplx I(0, 1);
  rep.gen.resize(static_cast<std::size_t>(basis.dim()));
  for (int j = 0; j < rs.rank; ++j)
    rep.gen[static_cast<std::size_t>(basis.cartan_index(j))] =
        I * (E[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] -
             E[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(j + 1)]);
  for (std::size_t r = 0; r < basis.root_spans.size(); ++r) {
    const auto [j, k] = basis.root_spans[r];
    const auto& Ejk = E[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    const auto& Ekj = E[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    rep.gen[static_cast<std::size_t>(basis.x_index(static_cast<int>(r)))] = (Ejk - Ekj) / kSqrt2;
    rep.gen[static_cast<std::size_t>(basis.y_index(static_cast<int>(r)))] = I * (Ejk + Ekj) / kSqrt2;
  }

  for (std::size_t i = 0; i < rep.gen.size(); ++i)
    check_anti_hermitian(rep.gen[i], basis.names[i].c_str());
  check_homomorphism(rep, basis);
  return rep;
}

Irrep build_irrep(const RootSystem& rs, const WeightVec& lambda, int dim_cap) {
  return build_irrep(build_lie_basis(rs), lambda, dim_cap);
}

Irrep adjoint_rep(const LieBasis& basis) {
  const RootSystem& rs = basis.rs;
  const int g = basis.dim();
  const int r = rs.rank;

  Eigen::MatrixXd A(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      A(i, j) = static_cast<double>(rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  const Eigen::MatrixXd L = Eigen::LLT<Eigen::MatrixXd>(A).matrixL();
  // Frame change P = blockdiag(L^{-T}, 1): makes the Cartan block orthonormal
  // for -tr(ab) while leaving the X/Y part untouched.
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(g, g);
  Eigen::MatrixXd Pinv = Eigen::MatrixXd::Identity(g, g);
  P.topLeftCorner(r, r) = L.transpose().inverse();
  Pinv.topLeftCorner(r, r) = L.transpose();

  Irrep rep;
  rep.rs = rs;
  rep.dim = g;
  WeightVec top;
  if (rs.n == 2) {
    top.coords = {Rat(2)};
  } else {
    top.coords.assign(static_cast<std::size_t>(r), Rat(0));
    top.coords.front() = Rat(1);
    top.coords.back() = Rat(1);
  }
  rep.highest = top;
  if (weyl_dim(rs, top) != g)
    throw std::logic_error("adjoint dimension disagrees with the highest root");

  rep.gen.resize(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(g, g);
    for (int j = 0; j < g; ++j)
      ad.col(j) = basis.structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const Eigen::MatrixXd M = Pinv * ad * P;
    rep.gen[static_cast<std::size_t>(i)] = M.cast<Cplx>();
    check_anti_hermitian(rep.gen[static_cast<std::size_t>(i)], basis.names[static_cast<std::size_t>(i)].c_str());
  }
  check_homomorphism(rep, basis);
  return rep;
}

Matrix casimir_matrix(const Irrep& rep, const LieBasis& basis) {
  const RootSystem& rs = basis.rs;
  const int d = rep.dim;
  Matrix C = Matrix::Zero(d, d);
  for (int a = 0; a < rs.rank; ++a)
    for (int b = 0; b < rs.rank; ++b) {
      const double w = to_double(rs.cartan_inverse[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      C -= w * rep.gen[static_cast<std::size_t>(basis.cartan_index(a))] *
           rep.gen[static_cast<std::size_t>(basis.cartan_index(b))];
    }
  for (std::size_t r = 0; r < basis.root_spans.size(); ++r) {
    const auto& X = rep.gen[static_cast<std::size_t>(basis.x_index(static_cast<int>(r)))];
    const auto& Y = rep.gen[static_cast<std::size_t>(basis.y_index(static_cast<int>(r)))];
    C -= X * X + Y * Y;
  }
  return C;
}

Rat casimir_eigenvalue(const RootSystem& rs, const WeightVec& lambda) {
  return invariant_form(rs, lambda, lambda) +
         Rat(2) * invariant_form(rs, lambda, rho_weight(rs));
}

Matrix evaluate_group(const Irrep& rep, const LieBasis& basis, const Matrix& g) {
  const Matrix v = log_special_unitary(g);
  return expm_antihermitian(rep.drho(basis.decompose(v)));
}

Vector evaluate_group_column(const Irrep& rep, const LieBasis& basis,
                             const Matrix& g, int col) {
  const Matrix v = log_special_unitary(g);
  return expm_antihermitian_column(rep.drho(basis.decompose(v)), col);
}

}  // namespace orbitq
