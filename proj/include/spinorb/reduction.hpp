#pragma once

#include "spinorb/configuration.hpp"
#include "spinorb/forms.hpp"

#include <array>
#include <vector>

namespace spinorb {

/// x + y sqrt(radicand) over Q(i); radicand is shared by all values of one computation.
struct Surd {
  GaussianRational rational;
  GaussianRational irrational;
  GaussianRational radicand;

  bool is_zero() const { return rational.is_zero() && irrational.is_zero(); }
  Surd inverse() const;
  std::string to_string() const;
  friend Surd operator+(const Surd &a, const Surd &b);
  friend Surd operator-(const Surd &a, const Surd &b);
  friend Surd operator*(const Surd &a, const Surd &b);
  friend bool operator==(const Surd &a, const Surd &b) {
    return a.rational == b.rational && a.irrational == b.irrational;
  }
};

/// 1-form on C^{2d} in the null basis, indexed by Label2d slot.
using NullCovector = std::vector<Surd>;

struct TwelveReduction {
  Surd lambda;
  /// bbar[i] and b[i] for i = 0..5, each with g(bbar_i, b_j) = delta_ij.
  std::array<NullCovector, 6> bbar;
  std::array<NullCovector, 6> b;
  /// The three index pairs (i, j) mixed by the substitution.
  std::array<std::pair<int, int>, 3> pairs;
  ExtForm b2;
  /// Representative of the orbit in the new basis: 1 + e^{123456}.
  Spinor impurity_two;
  /// B_2 equals lambda * sum_i bbar_i ^ b_i exactly.
  bool proportional = false;
};

/// Null covector pairing: g(e_i, eb_j) = delta_ij.
Surd null_pairing(const NullCovector &u, const NullCovector &v, int half_dim);

/// For the 12D square {0, 1234, 3456, 1256} (up to coordinate permutation) with nonzero
/// coefficients, builds a canonically normalized null basis in which B_2 is proportional to
/// sum_i bbar_i ^ b_i. Throws std::invalid_argument when the configuration does not have this shape
/// or a coefficient vanishes.
TwelveReduction reduce_12d_k4(const Configuration &c);

}  // namespace spinorb
