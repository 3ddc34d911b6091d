// sections.hpp
//
// The Hilbert-space side of orbit quantization.  Sections of the level-m
// bundle over the orbit of xi are realized as matrix coefficients
// s_a(g) = rho(g)_{a, hw} of the irreducible representation with highest
// weight m*xi (the level-m bundle over O_xi and the level-1 bundle over
// O_{m*xi} have the same sections; the half-sum delta agrees because both
// weights cut the same chamber face).
//
// A SectionSpace carries everything quadrature-dependent precomputed in one
// pass over the rule's samples:
//   gram_{ab}    = Int conj(s_a) s_b,
//   B[j][i]_{ab} = Int conj(s_a) u^{(i)}_j s_b,
// where u^{(i)}_j(g) is the j-th Cartan coefficient of Ad(g^{-1}) e_i.  Every
// Toeplitz matrix of a moment function f_{w,eta} is then the contraction
// gram^{-1} (constant*gram + sum_j eta_j sum_i w_i B[j][i]) — no further
// integration.  Monte-Carlo rules additionally keep per-block partial sums
// so statistics can be jackknifed over sample blocks.

#ifndef ORBITQ_SECTIONS_HPP
#define ORBITQ_SECTIONS_HPP

#include <string>
#include <vector>

#include "orbitq/irrep.hpp"
#include "orbitq/orbit.hpp"
#include "orbitq/quadrature.hpp"
#include "orbitq/report.hpp"

namespace orbitq {

enum class ShiftMode { karabegov, plain };

struct SectionSpace {
  OrbitSpec spec;        // the base orbit (weight xi)
  int m = 1;             // level
  OrbitSpec level_spec;  // the orbit of m*xi
  Irrep rep;             // highest weight m*xi
  Matrix gram;
  Matrix gram_inverse;
  double gram_condition = 0.0;
  std::vector<std::vector<Matrix>> B;  // [rank][basis dim]

  // haar-mc: per-block partial sums, block index first
  std::vector<Matrix> gram_blocks;
  std::vector<std::vector<std::vector<Matrix>>> B_blocks;
  int n_blocks = 1;

  // su2-euler: cached section columns and defining-rep elements per
  // (theta, phi) pair (index t * order + p); the psi angle cancels out of
  // every sesquilinear integrand, so it is summed out analytically.
  std::vector<Vector> columns;
  std::vector<Matrix> zx_cache;
  std::vector<double> pair_weight;  // psi-summed quadrature weight per pair

  std::string rule_descriptor;
  int cap = kDefaultDimCap;

  int dim() const { return rep.dim; }
};

struct ToeplitzOp {
  Matrix matrix;
  std::string f_descriptor;
  std::string rule_descriptor;
  double gram_condition = 0.0;
};

SectionSpace section_space(const OrbitSpec& spec, int m, const QuadratureRule& rule,
                           int cap = kDefaultDimCap);

// Compression of multiplication by the moment function f.
ToeplitzOp toeplitz(const SectionSpace& space, const OrbitFunction& f,
                    const QuadratureRule& rule);

// Compression of multiplication by the pointwise product f*g (a quadratic
// integrand, so it re-walks the rule instead of contracting the B tensors).
ToeplitzOp toeplitz_product(const SectionSpace& space, const OrbitFunction& f,
                            const OrbitFunction& g, const QuadratureRule& rule);

// Leave-one-block-out Toeplitz matrix for jackknife statistics (haar-mc).
Matrix toeplitz_leave_out(const SectionSpace& space, const OrbitFunction& f, int block);

// The derivative of the left-translation action on section coefficients:
// beta(v) = -drho(v)^T.  Anti-Hermitian homomorphism.
Matrix geom_rep_beta(const SectionSpace& space, const Eigen::VectorXd& v);

// For every basis direction v, the residual ||beta(v) + i T(f_{v, eta})||_F
// with eta = m xi + 2 delta (karabegov) or m xi (plain).  Deterministic rules
// pass at value <= tol; MC rules at value <= tol * (jackknife SE).
Report verify_theorem(const OrbitSpec& spec, int m, const QuadratureRule& rule,
                      double tol, ShiftMode shift = ShiftMode::karabegov,
                      int cap = kDefaultDimCap);

// ||beta(v) + i T(f_{v, m xi}) - (i/2) T(Delta f_{v, m xi})||_F.
double tuynman_check(const SectionSpace& space, const Eigen::VectorXd& v,
                     const QuadratureRule& rule);

// tuynman_check over every basis direction, packaged like verify_theorem:
// deterministic rules pass at residual <= tol, MC rules at tol * SE where the
// jackknife is taken on the combined operator T(f) - T(Delta f)/2 (the two
// leave-out solves share the reduced gram, so the combination is exact).
Report verify_tuynman(const OrbitSpec& spec, int m, const QuadratureRule& rule,
                      double tol, int cap = kDefaultDimCap);

}  // namespace orbitq

#endif
