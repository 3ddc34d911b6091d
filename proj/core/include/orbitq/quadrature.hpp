// quadrature.hpp
//
// Normalized-Haar quadrature rules over SU(n).
//
// su2-euler: a product rule in ZXZ Euler angles g = Z(phi) Xrot(theta) Z(psi)
// with equispaced trapezoid points in the two periodic angles and
// Gauss-Legendre in cos(theta).  Exact (<= 1e-12) for every integrand whose
// angular frequencies are integers and whose cos(theta)-degree is below the
// order — which covers all engine integrands (they are invariant under the
// center, so only integer frequencies occur).  A Schur-orthogonality
// self-test on the defining representation runs at build time.
//
// haar-mc: N independent Haar samples on SU(n), produced by QR
// orthonormalization of a seeded complex-Gaussian matrix with the R-diagonal
// phase correction and a final scalar determinant correction.  The Gaussian
// stream is a hand-rolled Box-Muller over mt19937_64 so the sample list is
// reproducible bit-for-bit from the seed.

#ifndef ORBITQ_QUADRATURE_HPP
#define ORBITQ_QUADRATURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orbitq/linalg.hpp"

namespace orbitq {

enum class RuleKind { su2_euler, haar_mc };

struct QuadratureRule {
  RuleKind kind = RuleKind::su2_euler;
  int order = 0;               // su2-euler: points per periodic angle
  std::int64_t n_samples = 0;  // haar-mc: N
  std::uint64_t seed = 0;

  std::vector<Matrix> samples;  // defining-representation group elements
  std::vector<double> weights;  // positive, summing to reported_mass
  double reported_mass = 0.0;

  // su2-euler metadata (sample index = (t * order + p) * order + s for
  // theta node t, phi index p, psi index s):
  std::vector<double> theta;         // acos of the Gauss-Legendre nodes
  std::vector<double> theta_weight;  // matching Gauss-Legendre weights
  std::vector<double> phi, psi;      // trapezoid angles

  // haar-mc block partition for jackknife error estimates
  int n_blocks = 1;
  int block_of(std::size_t sample) const;

  std::string descriptor() const;
};

// Nodes and weights of q-point Gauss-Legendre on [-1, 1] (Golub-Welsch).
void gauss_legendre(int q, std::vector<double>& nodes, std::vector<double>& weights);

// pre: order >= 2.
QuadratureRule build_su2_quadrature(int order);

// pre: n >= 2, N >= 10^4.  Deterministic in (n, N, seed).
QuadratureRule build_haar_mc(int n, std::int64_t N, std::uint64_t seed);

}  // namespace orbitq

#endif
