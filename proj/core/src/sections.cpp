#include "orbitq/sections.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "orbitq/errors.hpp"

namespace orbitq {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kConditionLimit = 1e12;

void set_gram_inverse(SectionSpace& space) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(space.gram);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  space.gram_condition =
      lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (!(space.gram_condition < kConditionLimit)) return;  // left unset
  space.gram_inverse = eig.eigenvectors() *
                       eig.eigenvalues().cwiseInverse().asDiagonal() *
                       eig.eigenvectors().adjoint();
}

void require_invertible(const SectionSpace& space) {
  if (space.gram_inverse.rows() != space.dim())
    throw ConditioningError("quadrature gram is ill-conditioned (rule too coarse)",
                            space.gram_condition);
}

// The psi angle only enters section products through a highest-weight phase
// that cancels in conj(s_a)*s_b, and the Cartan coefficients of Ad(g^-1)e_i
// are invariant under torus conjugation; so every accumulated integrand is
// psi-free and the psi sum collapses to a weight factor.
void accumulate_su2(SectionSpace& space, const QuadratureRule& rule) {
  const LieBasis& basis = space.spec.basis;
  const int d = space.rep.dim;
  const int gdim = basis.dim();
  const int order = rule.order;
  const int hw = space.rep.hw_index;

  const Matrix a_k = space.rep.gen[static_cast<std::size_t>(basis.x_index(0))] * kInvSqrt2;
  std::vector<double> wa(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a)
    wa[static_cast<std::size_t>(a)] =
        to_double(space.rep.weights[static_cast<std::size_t>(a)].coords[0]);

  space.gram = Matrix::Zero(d, d);
  space.B.assign(1, std::vector<Matrix>(static_cast<std::size_t>(gdim), Matrix::Zero(d, d)));
  const std::size_t tcount = rule.theta.size();
  space.columns.reserve(tcount * static_cast<std::size_t>(order));
  space.zx_cache.reserve(space.columns.capacity());
  space.pair_weight.reserve(space.columns.capacity());

  Eigen::VectorXd direction = Eigen::VectorXd::Zero(gdim);
  for (std::size_t t = 0; t < tcount; ++t) {
    const Matrix mtheta = expm_antihermitian(rule.theta[t] * a_k);
    const Vector col0 = mtheta.col(hw);
    // phi = psi = 0 sample at this theta is the bare polar rotation
    const Matrix& xrot =
        rule.samples[t * static_cast<std::size_t>(order) * static_cast<std::size_t>(order)];
    const double w_pair = rule.theta_weight[t] / (2.0 * order);
    for (int p = 0; p < order; ++p) {
      const double phi = rule.phi[static_cast<std::size_t>(p)];
      Vector c(d);
      for (int a = 0; a < d; ++a)
        c[a] = std::polar(1.0, phi * wa[static_cast<std::size_t>(a)] / 2.0) * col0[a];
      Matrix zphi = Matrix::Zero(2, 2);
      zphi(0, 0) = std::polar(1.0, phi / 2.0);
      zphi(1, 1) = std::polar(1.0, -phi / 2.0);
      const Matrix zx = zphi * xrot;

      const Matrix outer = c.conjugate() * c.transpose();
      space.gram.noalias() += w_pair * outer;
      for (int i = 0; i < gdim; ++i) {
        const Matrix h = zx.adjoint() * basis.elements[static_cast<std::size_t>(i)] * zx;
        const Eigen::VectorXd u = basis.cartan_coefficients(h);
        if (u[0] != 0.0) space.B[0][static_cast<std::size_t>(i)].noalias() += (w_pair * u[0]) * outer;
      }
      space.columns.push_back(c);
      space.zx_cache.push_back(zx);
      space.pair_weight.push_back(w_pair);
    }
  }
}

void accumulate_mc(SectionSpace& space, const QuadratureRule& rule) {
  const LieBasis& basis = space.spec.basis;
  const int d = space.rep.dim;
  const int gdim = basis.dim();
  const int rank = space.spec.rs.rank;
  const int hw = space.rep.hw_index;

  space.n_blocks = rule.n_blocks;
  space.gram_blocks.assign(static_cast<std::size_t>(space.n_blocks), Matrix::Zero(d, d));
  space.B_blocks.assign(
      static_cast<std::size_t>(space.n_blocks),
      std::vector<std::vector<Matrix>>(
          static_cast<std::size_t>(rank),
          std::vector<Matrix>(static_cast<std::size_t>(gdim), Matrix::Zero(d, d))));

  for (std::size_t s = 0; s < rule.samples.size(); ++s) {
    const Matrix& g = rule.samples[s];
    const Vector c = evaluate_group_column(space.rep, basis, g, hw);
    const Matrix outer = rule.weights[s] * (c.conjugate() * c.transpose());
    const auto b = static_cast<std::size_t>(rule.block_of(s));
    space.gram_blocks[b].noalias() += outer;
    for (int i = 0; i < gdim; ++i) {
      const Matrix h = g.adjoint() * basis.elements[static_cast<std::size_t>(i)] * g;
      const Eigen::VectorXd u = basis.cartan_coefficients(h);
      for (int j = 0; j < rank; ++j)
        if (u[j] != 0.0)
          space.B_blocks[b][static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
              .noalias() += u[j] * outer;
    }
  }

  space.gram = Matrix::Zero(d, d);
  space.B.assign(static_cast<std::size_t>(rank),
                 std::vector<Matrix>(static_cast<std::size_t>(gdim), Matrix::Zero(d, d)));
  for (std::size_t b = 0; b < space.gram_blocks.size(); ++b) {
    space.gram += space.gram_blocks[b];
    for (int j = 0; j < rank; ++j)
      for (int i = 0; i < gdim; ++i)
        space.B[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] +=
            space.B_blocks[b][static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
}

Matrix moment_contraction(const OrbitFunction& f, const Matrix& gram,
                          const std::vector<std::vector<Matrix>>& B) {
  Matrix a = Matrix::Zero(gram.rows(), gram.cols());
  if (f.constant != 0.0) a = f.constant * gram;
  for (std::size_t j = 0; j < B.size(); ++j) {
    const double eta_j = to_double(f.eta.coords[j]);
    if (eta_j == 0.0) continue;
    for (std::size_t i = 0; i < B[j].size(); ++i) {
      const double wi = f.w[static_cast<Eigen::Index>(i)];
      if (wi != 0.0) a.noalias() += (eta_j * wi) * B[j][i];
    }
  }
  return a;
}

// Jackknife noise scale of a Toeplitz estimate: the entrywise delete-one-block
// variances, aggregated in Frobenius.  This is the expected magnitude of the
// residual norm when the residual is pure quadrature noise — the right yard-
// stick for "residual <= k * SE".  (The variance of the norm itself
// concentrates and would reject at any sample size.)
double jackknife_matrix_se(const std::vector<Matrix>& leave_out) {
  const auto nb = static_cast<double>(leave_out.size());
  Matrix mean = Matrix::Zero(leave_out[0].rows(), leave_out[0].cols());
  for (const Matrix& t : leave_out) mean += t;
  mean /= nb;
  double ss = 0.0;
  for (const Matrix& t : leave_out) {
    const double dev = frobenius_norm(t - mean);
    ss += dev * dev;
  }
  return std::sqrt((nb - 1.0) / nb * ss);
}

}  // namespace

SectionSpace section_space(const OrbitSpec& spec, int m, const QuadratureRule& rule,
                           int cap) {
  if (m < 1) throw InvalidArgument("level must be positive");
  if (rule.samples.empty()) throw InvalidArgument("empty quadrature rule");
  if (rule.samples[0].rows() != spec.rs.n)
    throw InvalidArgument("quadrature rule group size does not match the orbit");

  SectionSpace space;
  space.spec = spec;
  space.m = m;
  space.level_spec = build_orbit(spec.rs, spec.basis, Rat(m) * spec.xi);
  space.rep = build_irrep(spec.basis, space.level_spec.xi, cap);
  space.cap = cap;
  space.rule_descriptor = rule.descriptor();

  if (rule.kind == RuleKind::su2_euler) {
    accumulate_su2(space, rule);
  } else {
    accumulate_mc(space, rule);
  }
  set_gram_inverse(space);
  return space;
}

ToeplitzOp toeplitz(const SectionSpace& space, const OrbitFunction& f,
                    const QuadratureRule& rule) {
  require_invertible(space);
  (void)rule;  // the integrals are already accumulated in the B tensors
  ToeplitzOp op;
  op.matrix = space.gram_inverse * moment_contraction(f, space.gram, space.B);
  op.f_descriptor = f.descriptor;
  op.rule_descriptor = space.rule_descriptor;
  op.gram_condition = space.gram_condition;
  return op;
}

Matrix toeplitz_leave_out(const SectionSpace& space, const OrbitFunction& f, int block) {
  if (space.n_blocks <= 1 || space.gram_blocks.empty())
    throw InvalidArgument("leave-one-out requires a blocked Monte-Carlo rule");
  const auto b = static_cast<std::size_t>(block);
  const Matrix gram = space.gram - space.gram_blocks[b];
  std::vector<std::vector<Matrix>> bt(space.B.size());
  for (std::size_t j = 0; j < space.B.size(); ++j) {
    bt[j].reserve(space.B[j].size());
    for (std::size_t i = 0; i < space.B[j].size(); ++i)
      bt[j].push_back(space.B[j][i] - space.B_blocks[b][j][i]);
  }
  const Matrix a = moment_contraction(f, gram, bt);
  return gram.ldlt().solve(a);
}

ToeplitzOp toeplitz_product(const SectionSpace& space, const OrbitFunction& f,
                            const OrbitFunction& g, const QuadratureRule& rule) {
  require_invertible(space);
  const LieBasis& basis = space.spec.basis;
  const int d = space.dim();
  Matrix a = Matrix::Zero(d, d);
  if (rule.kind == RuleKind::su2_euler) {
    for (std::size_t p = 0; p < space.columns.size(); ++p) {
      const double val = eval_matrix_coefficient(f, basis, space.zx_cache[p]) *
                         eval_matrix_coefficient(g, basis, space.zx_cache[p]);
      a.noalias() += (space.pair_weight[p] * val) *
                     (space.columns[p].conjugate() * space.columns[p].transpose());
    }
  } else {
    for (std::size_t s = 0; s < rule.samples.size(); ++s) {
      const Vector c =
          evaluate_group_column(space.rep, basis, rule.samples[s], space.rep.hw_index);
      const double val = eval_matrix_coefficient(f, basis, rule.samples[s]) *
                         eval_matrix_coefficient(g, basis, rule.samples[s]);
      a.noalias() += (rule.weights[s] * val) * (c.conjugate() * c.transpose());
    }
  }
  ToeplitzOp op;
  op.matrix = space.gram_inverse * a;
  op.f_descriptor = "(" + f.descriptor + ")*(" + g.descriptor + ")";
  op.rule_descriptor = space.rule_descriptor;
  op.gram_condition = space.gram_condition;
  return op;
}

Matrix geom_rep_beta(const SectionSpace& space, const Eigen::VectorXd& v) {
  return -space.rep.drho(v).transpose();
}

Report verify_theorem(const OrbitSpec& spec, int m, const QuadratureRule& rule,
                      double tol, ShiftMode shift, int cap) {
  const auto t0 = std::chrono::steady_clock::now();
  const SectionSpace space = section_space(spec, m, rule, cap);
  const bool mc = rule.kind == RuleKind::haar_mc;
  const WeightVec& eta =
      shift == ShiftMode::karabegov ? space.level_spec.karabegov_shift
                                    : space.level_spec.xi;

  Report report;
  report.check = "theorem";
  report.config["group"] = "su" + std::to_string(spec.rs.n);
  report.config["weight"] = spec.xi.str();
  report.config["m"] = std::to_string(m);
  report.config["rule"] = rule.descriptor();
  report.config["shift"] = shift == ShiftMode::karabegov ? "karabegov" : "plain";
  report.tol = tol;
  report.tolerance_mode = mc ? "se-multiple" : "absolute";
  report.seed = rule.seed;
  report.cap = cap;

  const int gdim = spec.basis.dim();
  bool all_pass = true;
  const Cplx iu(0.0, 1.0);
  for (int i = 0; i < gdim; ++i) {
    const OrbitFunction f = basis_moment(spec.basis, i, eta);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(gdim);
    v[i] = 1.0;
    const Matrix beta = geom_rep_beta(space, v);
    const Matrix t = toeplitz(space, f, rule).matrix;
    const double residual = frobenius_norm(beta + iu * t);

    ReportRow row;
    row.label = spec.basis.names[static_cast<std::size_t>(i)];
    row.value = residual;
    row.scale = frobenius_norm(beta);
    if (mc) {
      std::vector<Matrix> leave_out;
      leave_out.reserve(static_cast<std::size_t>(space.n_blocks));
      for (int b = 0; b < space.n_blocks; ++b)
        leave_out.push_back(toeplitz_leave_out(space, f, b));
      row.se = jackknife_matrix_se(leave_out);
      row.pass = residual <= tol * row.se;
    } else {
      row.pass = residual <= tol;
    }
    all_pass = all_pass && row.pass;
    report.max_value = std::max(report.max_value, residual);
    report.rows.push_back(row);
  }
  report.pass = all_pass;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

double tuynman_check(const SectionSpace& space, const Eigen::VectorXd& v,
                     const QuadratureRule& rule) {
  const OrbitFunction f = direction_moment(space.spec.basis, v, space.level_spec.xi);
  const OrbitFunction df = laplacian_of_moment_function(space.level_spec, f);
  const Matrix t_f = toeplitz(space, f, rule).matrix;
  const Matrix t_df = toeplitz(space, df, rule).matrix;
  const Matrix beta = geom_rep_beta(space, v);
  const Cplx iu(0.0, 1.0);
  return frobenius_norm(beta + iu * t_f - 0.5 * iu * t_df);
}

Report verify_tuynman(const OrbitSpec& spec, int m, const QuadratureRule& rule,
                      double tol, int cap) {
  const auto t0 = std::chrono::steady_clock::now();
  const SectionSpace space = section_space(spec, m, rule, cap);
  const bool mc = rule.kind == RuleKind::haar_mc;

  Report report;
  report.check = "tuynman";
  report.config["group"] = "su" + std::to_string(spec.rs.n);
  report.config["weight"] = spec.xi.str();
  report.config["m"] = std::to_string(m);
  report.config["rule"] = rule.descriptor();
  report.tol = tol;
  report.tolerance_mode = mc ? "se-multiple" : "absolute";
  report.seed = rule.seed;
  report.cap = cap;

  const int gdim = spec.basis.dim();
  bool all_pass = true;
  const Cplx iu(0.0, 1.0);
  for (int i = 0; i < gdim; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(gdim);
    v[i] = 1.0;
    const OrbitFunction f = basis_moment(spec.basis, i, space.level_spec.xi);
    const OrbitFunction df = laplacian_of_moment_function(space.level_spec, f);
    const Matrix beta = geom_rep_beta(space, v);
    const Matrix t_f = toeplitz(space, f, rule).matrix;
    const Matrix t_df = toeplitz(space, df, rule).matrix;
    const double residual = frobenius_norm(beta + iu * t_f - 0.5 * iu * t_df);

    ReportRow row;
    row.label = spec.basis.names[static_cast<std::size_t>(i)];
    row.value = residual;
    row.scale = frobenius_norm(beta);
    if (mc) {
      std::vector<Matrix> leave_out;
      leave_out.reserve(static_cast<std::size_t>(space.n_blocks));
      for (int b = 0; b < space.n_blocks; ++b) {
        leave_out.push_back(toeplitz_leave_out(space, f, b) -
                            0.5 * toeplitz_leave_out(space, df, b));
      }
      row.se = jackknife_matrix_se(leave_out);
      row.pass = residual <= tol * row.se;
    } else {
      row.pass = residual <= tol;
    }
    all_pass = all_pass && row.pass;
    report.max_value = std::max(report.max_value, residual);
    report.rows.push_back(row);
  }
  report.pass = all_pass;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace orbitq
