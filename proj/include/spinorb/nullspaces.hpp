#pragma once

#include "spinorb/clifford.hpp"
#include "spinorb/linalg.hpp"

#include <vector>

namespace spinorb {

/// Subspace of C^{2d}, stored as a reduced row echelon basis over the
/// coordinates (a_1..a_d, a_1^+..a_d^+).
class NullSubspace {
public:
  explicit NullSubspace(int half_dim) : d_(half_dim) {}
  /// Row-reduces `spanning`; dependent vectors are dropped.
  NullSubspace(int half_dim, const std::vector<Vector2d> &spanning);

  int half_dim() const { return d_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector2d> &basis() const { return basis_; }
  bool is_totally_null() const;

  friend bool operator==(const NullSubspace &, const NullSubspace &) = default;

private:
  int d_;
  std::vector<Vector2d> basis_;
};

ExactVector coordinates(const Vector2d &v);
Vector2d from_coordinates(const ExactVector &x, int half_dim);

/// {v : v psi = 0}. Throws std::invalid_argument for psi = 0.
NullSubspace annihilator(const Spinor &psi);
int nullity(const Spinor &psi);
bool is_pure(const Spinor &psi);
int intersection_dim(const NullSubspace &m1, const NullSubspace &m2);
NullSubspace intersect(const NullSubspace &m1, const NullSubspace &m2);

}  // namespace spinorb
