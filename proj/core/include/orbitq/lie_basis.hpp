// lie_basis.hpp
//
// A concrete real basis of su(n), tied to the root data:
//
//   elements[0 .. rank-1]          iH_{alpha_j}   (diagonal Cartan part)
//   elements[rank + 2r]            X_alpha        for positive root r
//   elements[rank + 2r + 1]        Y_alpha
//
// with, for alpha = e_j - e_k (j < k),
//
//   H_alpha = E_jj - E_kk,
//   X_alpha = (E_jk - E_kj) / sqrt(2),
//   Y_alpha = i (E_jk + E_kj) / sqrt(2).
//
// The scaling fixes the bracket relations
//
//   [iH_alpha, X_alpha] = 2 Y_alpha,
//   [iH_alpha, Y_alpha] = -2 X_alpha,
//   [X_alpha,  Y_alpha] = iH_alpha,
//
// so each root carries a standard sl(2) triple, and gives X, Y unit Frobenius
// norm.  The sign of [X,Y] is the one under which the homogeneous Laplacian
// acts on the orbit moment data with the expected negative multiple (checked
// end-to-end in the orbit tests).

#ifndef ORBITQ_LIE_BASIS_HPP
#define ORBITQ_LIE_BASIS_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbitq/linalg.hpp"
#include "orbitq/root_system.hpp"

namespace orbitq {

struct LieBasis {
  RootSystem rs;
  std::vector<Matrix> elements;    // n x n anti-Hermitian, traceless
  std::vector<std::string> names;  // "iH1", "X(1,2)", "Y(1,2)", ...
  std::vector<std::pair<int, int>> root_spans;  // positive root r <-> (j,k), 0-based
  // structure[i][j] = real coefficients of [elements[i], elements[j]]
  std::vector<std::vector<Eigen::VectorXd>> structure;

  int dim() const { return static_cast<int>(elements.size()); }
  int cartan_index(int j) const { return j; }           // j in [0, rank)
  int x_index(int r) const { return rs.rank + 2 * r; }  // r indexes positive roots
  int y_index(int r) const { return rs.rank + 2 * r + 1; }

  Matrix assemble(const Eigen::VectorXd& coeffs) const;

  // Real coefficients of an anti-Hermitian traceless matrix.  Closed form;
  // throws if the input fails anti-Hermiticity or tracelessness beyond tol.
  Eigen::VectorXd decompose(const Matrix& M, double tol = 1e-10) const;

  // Complex coefficients of an arbitrary traceless matrix over the
  // complexified basis.
  Vector decompose_complex(const Matrix& M, double tol = 1e-10) const;

  // The rank Cartan coefficients of M alone (partial sums of the imaginary
  // diagonal); cheaper than a full decompose when only the diagonal matters.
  Eigen::VectorXd cartan_coefficients(const Matrix& M) const;

  // Coefficients of [u, v] for coefficient vectors u, v.
  Eigen::VectorXd bracket(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
};

LieBasis build_lie_basis(const RootSystem& rs);

}  // namespace orbitq

#endif
