#pragma once

#include "spinorb/configuration.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinorb {

/// n[j] = number of the 2d boxes (a_i, a_i^+) occupied by exactly j words.
struct OccupationProfile {
  std::vector<int> n;
};

using EdgeLabels = std::map<std::pair<int, int>, int>;
using TetraLabels = std::map<std::array<int, 4>, int>;

OccupationProfile occupation_profile(const Configuration &c);
/// e = d - |S_alpha xor S_beta| for every pair alpha < beta.
EdgeLabels edge_dims(const Configuration &c);
/// t = number of coordinates on which all four words agree, for every 4-subset.
TetraLabels tetra_dims(const Configuration &c);

struct IdentityReport {
  int boxes = 0, boxes_expected = 0;
  int weighted = 0, weighted_expected = 0;
  bool dual = true;
  long edge_lhs = 0, edge_rhs = 0;
  long tetra_lhs = 0, tetra_rhs = 0;
  bool holds() const {
    return boxes == boxes_expected && weighted == weighted_expected && dual && edge_lhs == edge_rhs &&
           tetra_lhs == tetra_rhs;
  }
};

IdentityReport check_identities(const Configuration &c);
/// Every edge e <= d-4, and every tetrahedron t <= d-7 once k >= 4.
bool is_irreducible(const Configuration &c);

struct RuleBound {
  std::string rule;
  bool odd = false;
  /// Largest admissible k of the rule's parity; nullopt when unbounded, 0 when none.
  std::optional<int> max_k;
};

struct KBounds {
  int half_dim = 0;
  std::optional<int> max_odd;
  std::optional<int> max_even;
  std::vector<RuleBound> rules;
};

/// Edge-count and tetrahedron-count inequalities on the impurity k.
/// The tetrahedron rules are applied from d = 7 on.
KBounds feasible_k_bounds(int half_dim);

struct CombinatorialType {
  int half_dim = 0;
  /// Lexicographically least sorted word list in the orbit; starts with the vacuum.
  std::vector<uint32_t> code;
  EdgeLabels edges;
  TetraLabels tetras;

  int k() const { return static_cast<int>(code.size()); }
  Configuration representative() const;
  /// e.g. "7:0,f,3c"; the words in hexadecimal.
  std::string code_string() const;
  /// Sorted edge labels.
  std::vector<int> edge_multiset() const;

  friend bool operator==(const CombinatorialType &a, const CombinatorialType &b) {
    return a.half_dim == b.half_dim && a.code == b.code;
  }
  friend bool operator<(const CombinatorialType &a, const CombinatorialType &b) {
    if (a.k() != b.k())
      return a.k() < b.k();
    return a.code < b.code;
  }
};

/// Canonical representative under coordinate permutations and even XOR translations.
CombinatorialType canonical_form(const Configuration &c);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 10^8 unless SPINOR_NODE_BUDGET holds a positive integer.
uint64_t default_node_budget();

struct EnumerationOptions {
  /// With false, only the edge rule is enforced.
  bool require_irreducible = true;
  uint64_t node_budget = default_node_budget();
  unsigned threads = 0;  ///< 0: hardware concurrency
};

/// All types of k words with every edge e <= d-4 (plus the tetrahedron rule
/// when requested), sorted by canonical code. Throws BudgetExceeded.
std::vector<CombinatorialType> enumerate_types(int half_dim, int k, const EnumerationOptions &options = {});

}  // namespace spinorb
