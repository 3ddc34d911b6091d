// star.hpp
//
// Finite-level Berezin-Toeplitz asymptotics.  The classical observables are
// the level-independent moment functions f_{u, xi} (the level-m symbol
// f_{u, m xi}/m rescaled back to the fixed orbit).  At each level m the
// first-order defect
//
//     i*m*[T_{f_u}, T_{f_v}] - T_{{f_u, f_v}}
//
// is measured in operator norm, normalized by ||T_{f_u}|| * ||T_{f_v}|| so
// levels are comparable, and the log-log slope over the level list estimates
// the decay order (exactly -1 on the sphere).  The bracket enters with the
// quantization orientation {f_u, f_v} = f_{[v,u], xi}; see the conventions
// ledger — this is the orientation the commutator expansion actually selects,
// pinned by the identity-coset Poisson oracle in the orbit tests.

#ifndef ORBITQ_STAR_HPP
#define ORBITQ_STAR_HPP

#include <vector>

#include "orbitq/sections.hpp"

namespace orbitq {

struct AsymptoticSeries {
  std::vector<int> levels;
  std::vector<double> norms;  // normalized defect per level
  double fitted_slope = 0.0;
  double fitted_constant = 0.0;  // exp(intercept) of the log-log fit
};

// f_{[u,v], eta} assembled from structure constants.
OrbitFunction poisson_bracket_moment(const LieBasis& basis, const Eigen::VectorXd& u,
                                     const Eigen::VectorXd& v, const WeightVec& eta);

// Normalized commutator defects over the level list (ascending, >= 3 entries,
// else InsufficientDataError) with a log-log least-squares fit.  The rule
// must resolve the largest level; the same rule serves the smaller ones.
AsymptoticSeries commutator_defect(const OrbitSpec& spec, const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& v, const std::vector<int>& m_list,
                                   const QuadratureRule& rule, int cap = kDefaultDimCap);

// Antisymmetrized first-order coefficient against the bracket:
//     || i*[ m(T_f T_g - T_{fg}) - m(T_g T_f - T_{gf}) ] - T_{{f,g}} ||
// relative to ||T_{{f,g}}||, evaluated at the largest level (the product
// terms are quantized genuinely and cancel only within quadrature accuracy).
// Cross-level operator extrapolation is impossible — the spaces have
// different dimensions — so the estimate is per-level; see the ledger.
// u = v has a vanishing bracket: returns 0 and sets *degenerate.
double c1_antisymmetry_check(const OrbitSpec& spec, const Eigen::VectorXd& u,
                             const Eigen::VectorXd& v, const std::vector<int>& m_list,
                             const QuadratureRule& rule, bool* degenerate = nullptr,
                             int cap = kDefaultDimCap);

// Per-level values of the antisymmetry estimate (same statistic as
// c1_antisymmetry_check, one entry per level) — for reporting.
std::vector<double> c1_antisymmetry_series(const OrbitSpec& spec, const Eigen::VectorXd& u,
                                           const Eigen::VectorXd& v,
                                           const std::vector<int>& m_list,
                                           const QuadratureRule& rule,
                                           bool* degenerate = nullptr,
                                           int cap = kDefaultDimCap);

}  // namespace orbitq

#endif
