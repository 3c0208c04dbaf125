#pragma once

#include "spinorb/clifford.hpp"

#include <vector>

namespace spinorb {

/// Linear combination of basis pure spinors, each given by the set of
/// creation operators applied to the vacuum (an even-weight codeword).
struct Configuration {
  int half_dim = 0;
  std::vector<IndexSet> words;
  /// One nonzero coefficient per word; empty means all ones.
  std::vector<GaussianRational> coeffs;

  /// Validates distinctness, even weight, index range and coefficient count.
  static Configuration make(int half_dim, const std::vector<std::vector<int>> &words,
                            std::vector<GaussianRational> coeffs = {});
  void validate() const;

  int size() const { return static_cast<int>(words.size()); }
  GaussianRational coeff(int alpha) const { return coeffs.empty() ? GaussianRational(1) : coeffs[alpha]; }

  friend bool operator==(const Configuration &, const Configuration &) = default;
};

/// sum_alpha c_alpha e^{S_alpha}. Throws std::invalid_argument on an empty configuration.
Spinor spinor_of(const Configuration &c);

}  // namespace spinorb
