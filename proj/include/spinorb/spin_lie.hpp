#pragma once

#include "spinorb/clifford.hpp"
#include "spinorb/configuration.hpp"
#include "spinorb/linalg.hpp"

#include <vector>

namespace spinorb {

/// X = 1/2 A^{ij}(a_i a_j^+ - a_j^+ a_i) + sum_{i<j} beta^{ij} a_i^+ a_j^+ + sum_{i<j} B^{ij} a_i a_j.
struct LieElement {
  Matrix A;
  Matrix beta;  ///< antisymmetric
  Matrix B;     ///< antisymmetric

  explicit LieElement(int half_dim) : A(half_dim, half_dim), beta(half_dim, half_dim), B(half_dim, half_dim) {}
  int half_dim() const { return A.rows(); }
  bool is_zero() const;

  friend bool operator==(const LieElement &, const LieElement &) = default;
};

/// d(2d-1): A entries row-major, then beta^{ij} and B^{ij} for i < j.
int lie_dimension(int half_dim);
/// Coordinates with respect to lie_basis.
ExactVector lie_coordinates(const LieElement &x);
LieElement lie_from_coordinates(const ExactVector &coords, int half_dim);
/// Unit matrices E_ij for A, then E_ij - E_ji for beta and B.
std::vector<LieElement> lie_basis(int half_dim);

/// t_i = a_i a_i^+ - a_i^+ a_i, i.e. A = 2 E_ii.
LieElement cartan_generator(int half_dim, int i);

Spinor act(const LieElement &x, const Spinor &psi);
/// [X, v] for v in C^{2d}: (A u + B w) on a_i, (beta u - A^T w) on a_i^+.
Vector2d adjoint_action(const LieElement &x, const Vector2d &v);
LieElement bracket(const LieElement &x, const LieElement &y);
LieElement operator+(const LieElement &x, const LieElement &y);
LieElement operator*(const GaussianRational &c, const LieElement &x);

struct StabilizerAlgebra {
  int dimension = 0;
  std::vector<LieElement> basis;
};

/// Kernel of X -> act(X, psi), reduced in lie_basis coordinates.
/// Throws std::invalid_argument for psi = 0.
StabilizerAlgebra stabilizer_algebra(const Spinor &psi);
/// Throws std::invalid_argument if span(basis) is not closed under bracket.
int derived_subalgebra_dim(const std::vector<LieElement> &basis);

/// Rows alpha, columns i: eigenvalue of t_i on e^{S_alpha} (+1 if i is absent, -1 otherwise).
Matrix cartan_eigenvalues(const Configuration &c);
/// True iff every choice of coefficient ratios can be absorbed by the Cartan torus.
bool cartan_equalizable(const Configuration &c);

}  // namespace spinorb
