#include "orbitq/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orbitq/errors.hpp"

namespace orbitq {

namespace {

// Indices of the positive roots in `subset`, in root-system order.
std::vector<int> root_indices(const RootSystem& rs, const std::vector<RootVec>& subset) {
  std::vector<int> out;
  for (std::size_t r = 0; r < rs.positive_roots.size(); ++r)
    for (const auto& a : subset)
      if (rs.positive_roots[r].coords == a.coords) {
        out.push_back(static_cast<int>(r));
        break;
      }
  return out;
}

// Zero out every coefficient outside the tangent span (Cartan directions and
// stabilizer-root pairs); report whether anything was dropped.
Eigen::VectorXd project_tangent(const OrbitSpec& spec, const Eigen::VectorXd& v,
                                bool& projected) {
  if (v.size() != spec.basis.dim())
    throw InvalidArgument("tangent vector has wrong length");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (int r : spec.tangent_roots) {
    out[spec.basis.x_index(r)] = v[spec.basis.x_index(r)];
    out[spec.basis.y_index(r)] = v[spec.basis.y_index(r)];
  }
  if ((out - v).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, v.cwiseAbs().maxCoeff()))
    projected = true;
  return out;
}

double pair_eta_with(const WeightVec& eta, const Eigen::VectorXd& coeffs,
                     const LieBasis& basis) {
  double s = 0.0;
  for (int j = 0; j < basis.rs.rank; ++j)
    s += to_double(eta.coords[static_cast<std::size_t>(j)]) * coeffs[basis.cartan_index(j)];
  return s;
}

FormValue bracket_pairing(const OrbitSpec& spec, const WeightVec& eta,
                          const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  FormValue out;
  const Eigen::VectorXd up = project_tangent(spec, u, out.projected);
  const Eigen::VectorXd vp = project_tangent(spec, v, out.projected);
  const Eigen::VectorXd br = spec.basis.bracket(up, vp);
  out.value = pair_eta_with(eta, br, spec.basis);
  return out;
}

}  // namespace

OrbitSpec build_orbit(const RootSystem& rs, const LieBasis& basis,
                      const WeightVec& xi) {
  if (static_cast<int>(xi.coords.size()) != rs.rank)
    throw InvalidArgument("build_orbit: weight has wrong rank");
  if (!is_integral(xi))
    throw IntegralityError("orbit weight must be integral for a prequantum line bundle");
  if (xi.is_zero()) throw DegenerateOrbitError("zero weight: the orbit is a point");
  if (!is_dominant(xi)) throw InvalidArgument("orbit weight must be dominant");

  OrbitSpec spec;
  spec.rs = rs;
  spec.basis = basis;
  spec.xi = xi;
  spec.split = stabilizer_split(rs, xi);
  spec.tangent_roots = root_indices(rs, spec.split.complement);
  for (int r : spec.tangent_roots) {
    const Rat a = pair_weight_coroot(rs, xi, rs.positive_roots[static_cast<std::size_t>(r)]);
    if (a <= Rat(0)) throw std::logic_error("complementary root with nonpositive pairing");
    spec.metric_diag.push_back(a);
  }
  spec.delta = delta_xi(rs, xi);
  spec.karabegov_shift = xi + Rat(2) * spec.delta;
  if (!is_integral(spec.karabegov_shift) || !is_dominant(spec.karabegov_shift))
    throw std::logic_error("shift weight lost integrality or dominance");
  spec.einstein = einstein_constant(rs, xi);
  if (spec.einstein) {
    // On Einstein orbits the shifted weight is exactly (1 + lambda) xi.
    const WeightVec want = (Rat(1) + *spec.einstein) * xi;
    if (!(want.coords == spec.karabegov_shift.coords))
      throw std::logic_error("Einstein shift identity failed");
  }
  return spec;
}

FormValue kks_form_at_identity(const OrbitSpec& spec, const Eigen::VectorXd& u,
                               const Eigen::VectorXd& v) {
  return bracket_pairing(spec, spec.xi, u, v);
}

FormValue ricci_form_at_identity(const OrbitSpec& spec, const Eigen::VectorXd& u,
                                 const Eigen::VectorXd& v) {
  return bracket_pairing(spec, Rat(2) * spec.delta, u, v);
}

double eval_matrix_coefficient(const OrbitFunction& f, const LieBasis& basis,
                               const Matrix& g) {
  const int n = basis.rs.n;
  if (g.rows() != n || g.cols() != n)
    throw InvalidArgument("group element has wrong size");
  if ((g.adjoint() * g - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidArgument("group element is not unitary");
  const Matrix conj = g.adjoint() * basis.assemble(f.w) * g;  // Ad(g^{-1}) w
  return f.constant + pair_eta_with(f.eta, basis.cartan_coefficients(conj), basis);
}

OrbitFunction basis_moment(const LieBasis& basis, int index, const WeightVec& eta) {
  if (index < 0 || index >= basis.dim())
    throw InvalidArgument("basis index out of range");
  OrbitFunction f;
  f.w = Eigen::VectorXd::Zero(basis.dim());
  f.w[index] = 1.0;
  f.eta = eta;
  f.descriptor = "f(" + basis.names[static_cast<std::size_t>(index)] + "; " + eta.str() + ")";
  return f;
}

OrbitFunction direction_moment(const LieBasis& basis, const Eigen::VectorXd& w,
                               const WeightVec& eta) {
  if (w.size() != basis.dim()) throw InvalidArgument("direction has wrong size");
  OrbitFunction f;
  f.w = w;
  f.eta = eta;
  f.descriptor = "f(dir; " + eta.str() + ")";
  return f;
}

OrbitFunction constant_function(const LieBasis& basis, double value) {
  OrbitFunction f;
  f.w = Eigen::VectorXd::Zero(basis.dim());
  f.eta.coords.assign(static_cast<std::size_t>(basis.rs.rank), Rat(0));
  f.constant = value;
  f.descriptor = "const";
  return f;
}

Matrix laplace_operator(const OrbitSpec& spec, const Irrep& rep) {
  if (rep.gen.size() != static_cast<std::size_t>(spec.basis.dim()))
    throw InvalidArgument("representation was built over a different basis");
  Matrix omega = Matrix::Zero(rep.dim, rep.dim);
  for (std::size_t t = 0; t < spec.tangent_roots.size(); ++t) {
    const int r = spec.tangent_roots[t];
    const double inv_a = 1.0 / to_double(spec.metric_diag[t]);
    const Matrix& X = rep.gen[static_cast<std::size_t>(spec.basis.x_index(r))];
    const Matrix& Y = rep.gen[static_cast<std::size_t>(spec.basis.y_index(r))];
    omega += inv_a * (X * X + Y * Y);
  }
  return omega;
}

Eigen::MatrixXd laplace_operator_adjoint(const OrbitSpec& spec) {
  const int g = spec.basis.dim();
  auto ad = [&](int i) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(g, g);
    for (int j = 0; j < g; ++j)
      M.col(j) = spec.basis.structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return M;
  };
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(g, g);
  for (std::size_t t = 0; t < spec.tangent_roots.size(); ++t) {
    const int r = spec.tangent_roots[t];
    const double inv_a = 1.0 / to_double(spec.metric_diag[t]);
    const Eigen::MatrixXd X = ad(spec.basis.x_index(r));
    const Eigen::MatrixXd Y = ad(spec.basis.y_index(r));
    omega += inv_a * (X * X + Y * Y);
  }
  return omega;
}

Eigen::VectorXd cartan_dual_coefficients(const RootSystem& rs, const WeightVec& eta) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(rs.rank + 2 * static_cast<int>(rs.positive_roots.size()));
  for (int i = 0; i < rs.rank; ++i) {
    Rat acc(0);
    for (int j = 0; j < rs.rank; ++j)
      acc += rs.cartan_inverse[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             eta.coords[static_cast<std::size_t>(j)];
    out[i] = to_double(acc);
  }
  return out;
}

OrbitFunction laplacian_of_moment_function(const OrbitSpec& spec,
                                           const OrbitFunction& f) {
  // Find rational t with eta = t * xi, matching zero patterns exactly.
  std::optional<Rat> t;
  for (int j = 0; j < spec.rs.rank; ++j) {
    const Rat& x = spec.xi.coords[static_cast<std::size_t>(j)];
    const Rat& e = f.eta.coords[static_cast<std::size_t>(j)];
    if (x == Rat(0)) {
      if (e != Rat(0))
        throw InvalidArgument("Laplacian is only provided for targets proportional to the orbit weight");
      continue;
    }
    const Rat ratio = e / x;
    if (t && *t != ratio)
      throw InvalidArgument("Laplacian is only provided for targets proportional to the orbit weight");
    t = ratio;
  }
  if (!t) throw std::logic_error("orbit weight is zero");

  OrbitFunction out;
  out.w = f.w;
  out.eta = (Rat(-4) * *t) * spec.delta;
  out.descriptor = "Delta[" + f.descriptor + "]";
  return out;
}

}  // namespace orbitq
