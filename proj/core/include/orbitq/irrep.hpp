// irrep.hpp
//
// Unitary irreducible representations of su(n) with explicit generator
// matrices over the LieBasis layout.
//
// Construction is via Gelfand-Tsetlin patterns: basis vectors are labelled by
// integer triangles interlacing down from the partition of the highest
// weight, the simple raising/lowering operators have closed-form matrix
// elements, and the basis is orthonormal by construction (so every dρ(X) for
// X in the real algebra is anti-Hermitian, and exponentials are unitary).
//
// Non-simple elementary matrices E_jk are produced by iterated commutators of
// the simple ones; Hermiticity pairing dρ(E_jk)† = dρ(E_kj) is asserted at
// build time, as is the homomorphism property on a generator sample.

#ifndef ORBITQ_IRREP_HPP
#define ORBITQ_IRREP_HPP

#include <cstdint>
#include <vector>

#include "orbitq/lie_basis.hpp"
#include "orbitq/linalg.hpp"
#include "orbitq/root_system.hpp"

namespace orbitq {

// Rows of a Gelfand-Tsetlin pattern, stored shortest-first: rows[k] has k+1
// entries, rows[n-1] is the partition of the highest weight.  Interlacing:
// rows[k+1][i] >= rows[k][i] >= rows[k+1][i+1].
struct GTPattern {
  std::vector<std::vector<std::int64_t>> rows;
};

struct Irrep {
  RootSystem rs;
  WeightVec highest;
  int dim = 0;
  // Generator matrices parallel to LieBasis::elements (anti-Hermitian).
  std::vector<Matrix> gen;
  // GT labels and per-basis-vector weights (fundamental-weight coords).
  // Empty for the adjoint model built by adjoint_rep, whose real frame mixes
  // the +alpha/-alpha weight lines.
  std::vector<GTPattern> patterns;
  std::vector<WeightVec> weights;
  int hw_index = -1;  // index of the highest-weight vector; -1 if not labelled

  Matrix drho(const Eigen::VectorXd& v) const;
  Matrix drho_complex(const Vector& v) const;
};

// Default bound on the constructed dimension; exceeding it raises
// ResourceLimitError.  Keeps a mistyped weight from allocating gigabytes.
inline constexpr int kDefaultDimCap = 200;

Irrep build_irrep(const LieBasis& basis, const WeightVec& lambda,
                  int dim_cap = kDefaultDimCap);
Irrep build_irrep(const RootSystem& rs, const WeightVec& lambda,
                  int dim_cap = kDefaultDimCap);

// The representation of su(n) on its own complexification in a frame that is
// orthonormal for -tr(ab): the Cartan block is rotated by S with S^T A S = I
// (A the Cartan matrix = Gram of the iH_j), the X/Y part is kept as-is.
// highest weight = highest root.
Irrep adjoint_rep(const LieBasis& basis);

// -sum_{ij} (G^{-1})_{ij} dρ(e_i) dρ(e_j) for the -tr(ab) Gram matrix G of
// the LieBasis.  Scalar on an irreducible representation.
Matrix casimir_matrix(const Irrep& rep, const LieBasis& basis);

// The scalar the Casimir acts by: (λ, λ + 2ρ̂) in the length-2 normalized
// form, ρ̂ the half-sum of positive roots.  Exact.
Rat casimir_eigenvalue(const RootSystem& rs, const WeightVec& lambda);

// ρ(g) for g special-unitary in the defining representation: take the
// principal su(n) logarithm, decompose over the LieBasis, apply dρ, and
// exponentiate.  evaluate_group_column returns a single column.
Matrix evaluate_group(const Irrep& rep, const LieBasis& basis, const Matrix& g);
Vector evaluate_group_column(const Irrep& rep, const LieBasis& basis,
                             const Matrix& g, int col);

}  // namespace orbitq

#endif
