// root_system.hpp
//
// Root and weight combinatorics for su(n) (type A_{n-1}), in exact rational
// arithmetic.  Conventions:
//
//   * Weights are stored in fundamental-weight coordinates: coordinate i of a
//     weight is its pairing with the simple coroot H_{alpha_i}.
//   * Roots are stored in simple-root coordinates.
//   * The invariant form is normalized so every root has squared length 2;
//     with that normalization (w_i, alpha_j) = delta_ij and the Gram matrix
//     of the fundamental weights is the inverse Cartan matrix.
//
// A weight xi selects a coadjoint orbit.  Its stabilizer is generated by the
// positive roots orthogonal to xi; the complementary positive roots span the
// tangent directions.  delta_xi is the half sum of the complementary positive
// roots; the Ricci tensor of the orbit metric and the quantization shift are
// both expressed through it downstream.

#ifndef ORBITQ_ROOT_SYSTEM_HPP
#define ORBITQ_ROOT_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitq/rational.hpp"

namespace orbitq {

// Coordinates over the simple roots.  Integer entries: every root of A_{n-1}
// is a {0,1} combination of consecutive simple roots.
struct RootVec {
  std::vector<std::int64_t> coords;

  bool operator==(const RootVec&) const = default;
};

// Coordinates over the fundamental weights (values on the simple coroots).
struct WeightVec {
  std::vector<Rat> coords;

  bool operator==(const WeightVec&) const = default;

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator*=(const Rat& s);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator*(const Rat& s, WeightVec a) { return a *= s; }
  bool is_zero() const;
  std::string str() const;  // e.g. "(3/2, 0)"
};

struct RootSystem {
  int n = 0;     // su(n)
  int rank = 0;  // n - 1
  std::vector<RootVec> positive_roots;          // ordered: (j,k) pairs, j<k, lex
  std::vector<std::vector<std::int64_t>> cartan;     // A[i][j] = <alpha_i, H_alpha_j>
  std::vector<std::vector<Rat>> cartan_inverse;      // Gram matrix of fund. weights
};

struct StabilizerSplit {
  std::vector<RootVec> stabilizer;  // positive roots with <xi, H_alpha> = 0
  std::vector<RootVec> complement;  // the rest; tangent directions of the orbit
};

RootSystem build_root_system(int n);

// <lambda, H_alpha> = 2 (lambda, alpha) / (alpha, alpha).  alpha must be a
// root of rs (either sign).
Rat pair_weight_coroot(const RootSystem& rs, const WeightVec& lambda, const RootVec& alpha);

// Invariant form (lambda, mu) with roots normalized to squared length 2.
Rat invariant_form(const RootSystem& rs, const WeightVec& lambda, const WeightVec& mu);

// Fundamental-weight coordinates of a root combination.
WeightVec root_to_weight(const RootSystem& rs, const RootVec& alpha);

bool is_integral(const WeightVec& xi);
bool is_dominant(const WeightVec& xi);

// Splits the positive roots into stabilizer and complement of xi.  Requires
// dominant xi; rejects xi = 0 (point orbit).
StabilizerSplit stabilizer_split(const RootSystem& rs, const WeightVec& xi);

// Half sum of the complementary positive roots of xi, as a weight.
WeightVec delta_xi(const RootSystem& rs, const WeightVec& xi);

// The scalar lambda with xi = (2/lambda) delta_xi, when delta_xi is
// proportional to xi (the orbit metric is then Einstein and Kaehler-Einstein
// with that constant).  Empty when not proportional.
std::optional<Rat> einstein_constant(const RootSystem& rs, const WeightVec& xi);

// Dimension of the irreducible representation with highest weight lambda
// (Weyl dimension formula, evaluated exactly).
std::int64_t weyl_dim(const RootSystem& rs, const WeightVec& lambda);

// Half sum of all positive roots: the weight with every coordinate 1.
WeightVec rho_weight(const RootSystem& rs);

}  // namespace orbitq

#endif
