#include "orbitq/star.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "orbitq/errors.hpp"
#include "orbitq/linalg.hpp"

namespace orbitq {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void validate_levels(const std::vector<int>& m_list) {
  if (m_list.size() < 3) {
    throw InsufficientDataError("level list needs at least 3 entries for a slope fit, got " +
                                std::to_string(m_list.size()));
  }
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 1) throw InvalidArgument("levels must be >= 1");
    if (i > 0 && m_list[i] <= m_list[i - 1]) {
      throw InvalidArgument("level list must be strictly ascending");
    }
  }
}

struct LogLogFit {
  double slope = 0.0;
  double constant = 0.0;
};

// Least squares for log(y) = intercept + slope * log(x).  Values at or below
// the noise floor are clamped so a degenerate (all-zero) series fits flat
// instead of producing -inf.
LogLogFit fit_log_log(const std::vector<int>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    lx[i] = std::log(static_cast<double>(x[i]));
    ly[i] = std::log(std::max(y[i], 1e-300));
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.constant = std::exp(my - fit.slope * mx);
  return fit;
}

}  // namespace

OrbitFunction poisson_bracket_moment(const LieBasis& basis, const Eigen::VectorXd& u,
                                     const Eigen::VectorXd& v, const WeightVec& eta) {
  if (u.size() != basis.dim() || v.size() != basis.dim()) {
    throw InvalidArgument("bracket directions must have length dim(g)");
  }
  OrbitFunction f = direction_moment(basis, basis.bracket(u, v), eta);
  f.descriptor = "f([u,v]; eta)";
  return f;
}

AsymptoticSeries commutator_defect(const OrbitSpec& spec, const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& v, const std::vector<int>& m_list,
                                   const QuadratureRule& rule, int cap) {
  validate_levels(m_list);

  AsymptoticSeries series;
  series.levels = m_list;
  series.norms.reserve(m_list.size());

  for (int m : m_list) {
    const SectionSpace space = section_space(spec, m, rule, cap);
    const LieBasis& basis = space.level_spec.basis;

    // Level-independent classical observables f_{u, xi} = f_{u, m xi}/m.
    const OrbitFunction f_u = direction_moment(basis, u, spec.xi);
    const OrbitFunction f_v = direction_moment(basis, v, spec.xi);
    const OrbitFunction f_br = poisson_bracket_moment(basis, v, u, spec.xi);

    const Matrix t_u = toeplitz(space, f_u, rule).matrix;
    const Matrix t_v = toeplitz(space, f_v, rule).matrix;
    const Matrix t_br = toeplitz(space, f_br, rule).matrix;

    const Matrix defect =
        kI * static_cast<double>(m) * (t_u * t_v - t_v * t_u) - t_br;

    const double denom = operator_norm(t_u) * operator_norm(t_v);
    if (denom < 1e-300) {
      throw DegenerateOrbitError("Toeplitz operators vanish; defect normalization undefined");
    }
    series.norms.push_back(operator_norm(defect) / denom);
  }

  const LogLogFit fit = fit_log_log(series.levels, series.norms);
  series.fitted_slope = fit.slope;
  series.fitted_constant = fit.constant;
  return series;
}

std::vector<double> c1_antisymmetry_series(const OrbitSpec& spec, const Eigen::VectorXd& u,
                                           const Eigen::VectorXd& v,
                                           const std::vector<int>& m_list,
                                           const QuadratureRule& rule, bool* degenerate,
                                           int cap) {
  validate_levels(m_list);
  if (degenerate != nullptr) *degenerate = false;

  std::vector<double> values;
  values.reserve(m_list.size());

  for (int m : m_list) {
    const SectionSpace space = section_space(spec, m, rule, cap);
    const LieBasis& basis = space.level_spec.basis;

    const OrbitFunction f_u = direction_moment(basis, u, spec.xi);
    const OrbitFunction f_v = direction_moment(basis, v, spec.xi);
    const OrbitFunction f_br = poisson_bracket_moment(basis, v, u, spec.xi);

    const Matrix t_br = toeplitz(space, f_br, rule).matrix;
    const double scale = operator_norm(t_br);
    if (scale < 1e-13) {
      // Vanishing bracket (u parallel to v in the bracket sense): the
      // antisymmetry statistic has no denominator.
      if (degenerate != nullptr) *degenerate = true;
      values.push_back(0.0);
      continue;
    }

    const Matrix t_u = toeplitz(space, f_u, rule).matrix;
    const Matrix t_v = toeplitz(space, f_v, rule).matrix;
    const Matrix t_uv = toeplitz_product(space, f_u, f_v, rule).matrix;
    const Matrix t_vu = toeplitz_product(space, f_v, f_u, rule).matrix;

    // Genuine first-order pieces m (T_f T_g - T_{fg}); their antisymmetrized
    // combination reproduces m [T_f, T_g] up to the quadrature-level mismatch
    // between T_{fg} and T_{gf}.
    const Matrix c1_est = static_cast<double>(m) * ((t_u * t_v - t_uv) - (t_v * t_u - t_vu));
    values.push_back(operator_norm(kI * c1_est - t_br) / scale);
  }
  return values;
}

double c1_antisymmetry_check(const OrbitSpec& spec, const Eigen::VectorXd& u,
                             const Eigen::VectorXd& v, const std::vector<int>& m_list,
                             const QuadratureRule& rule, bool* degenerate, int cap) {
  const std::vector<double> values =
      c1_antisymmetry_series(spec, u, v, m_list, rule, degenerate, cap);
  return values.back();
}

}  // namespace orbitq

