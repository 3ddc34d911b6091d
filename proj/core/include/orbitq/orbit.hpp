// orbit.hpp
//
// Coadjoint-orbit geometry, anchored at the identity coset and propagated by
// invariance: the symplectic and Ricci pairings, the diagonal metric
// coefficients over the complementary sl(2) triples, moment-map matrix
// coefficients f_{w,eta}(g) = <eta, Ad(g^{-1}) w>, and the homogeneous
// Laplacian Omega.
//
// The pairing between a weight functional eta and an algebra element is read
// off representation-theoretically: decompose the element over the LieBasis
// and contract its iH-coefficients with eta's fundamental-weight coordinates.
// No Killing matrix is ever materialized.

#ifndef ORBITQ_ORBIT_HPP
#define ORBITQ_ORBIT_HPP

#include <optional>
#include <string>

#include "orbitq/irrep.hpp"
#include "orbitq/lie_basis.hpp"
#include "orbitq/linalg.hpp"
#include "orbitq/root_system.hpp"

namespace orbitq {

struct OrbitSpec {
  RootSystem rs;
  LieBasis basis;
  WeightVec xi;                      // dominant integral, nonzero
  StabilizerSplit split;             // stabilizer / complement positive roots
  std::vector<int> tangent_roots;    // positive-root indices of the complement
  std::vector<Rat> metric_diag;      // a_alpha = <xi, H_alpha>, one per pair
  WeightVec delta;                   // half-sum of complementary roots
  WeightVec karabegov_shift;         // xi + 2 delta
  std::optional<Rat> einstein;       // lambda with xi = (2/lambda) delta

  int dim_real() const { return 2 * static_cast<int>(tangent_roots.size()); }
};

struct OrbitFunction {
  Eigen::VectorXd w;  // LieBasis coefficients of the algebra direction
  WeightVec eta;      // the coadjoint target the direction is paired against
  double constant = 0.0;  // additive literal term: f(g) = constant + <eta, ...>
  std::string descriptor;
};

// Result of an identity-coset 2-form evaluation.  `projected` reports that
// the inputs had components outside the tangent span which were dropped.
struct FormValue {
  double value = 0.0;
  bool projected = false;
};

OrbitSpec build_orbit(const RootSystem& rs, const LieBasis& basis,
                      const WeightVec& xi);

// <xi, [u,v]> after projecting u, v to the tangent span at the identity.
FormValue kks_form_at_identity(const OrbitSpec& spec, const Eigen::VectorXd& u,
                               const Eigen::VectorXd& v);

// Same bilinear expression against 2*delta in place of xi.
FormValue ricci_form_at_identity(const OrbitSpec& spec, const Eigen::VectorXd& u,
                                 const Eigen::VectorXd& v);

// f_{w,eta}(g) = <eta, Ad(g^{-1}) w> for g special-unitary in the defining
// representation.  Real by construction.
double eval_matrix_coefficient(const OrbitFunction& f, const LieBasis& basis,
                               const Matrix& g);

// Moment function along a single basis direction.
OrbitFunction basis_moment(const LieBasis& basis, int index, const WeightVec& eta);

// Moment function along an arbitrary direction w (LieBasis coefficients).
OrbitFunction direction_moment(const LieBasis& basis, const Eigen::VectorXd& w,
                               const WeightVec& eta);

// The literal constant function value*1 on the orbit.
OrbitFunction constant_function(const LieBasis& basis, double value);

// Omega = sum over complementary roots of a_alpha^{-1} (dρ(X_alpha)^2 +
// dρ(Y_alpha)^2); Hermitian negative semidefinite.
Matrix laplace_operator(const OrbitSpec& spec, const Irrep& rep);

// Omega in plain LieBasis coordinates of the adjoint action (built straight
// from the structure tensor); same spectrum as laplace_operator on the
// adjoint model, convenient for exact Cartan-dual checks.
Eigen::MatrixXd laplace_operator_adjoint(const OrbitSpec& spec);

// LieBasis coefficient vector of the form-dual of eta: the Cartan element H
// with <mu, H> = form(mu, eta) for every weight mu (iH-coordinates A^{-1}eta).
Eigen::VectorXd cartan_dual_coefficients(const RootSystem& rs, const WeightVec& eta);

// For eta = t*xi: Delta f_{w,eta} = f_{w, -4t*delta}.  Other eta are not
// needed by any verified identity and are rejected.
OrbitFunction laplacian_of_moment_function(const OrbitSpec& spec,
                                           const OrbitFunction& f);

}  // namespace orbitq

#endif
