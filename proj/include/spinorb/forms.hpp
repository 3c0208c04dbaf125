#pragma once

#include "spinorb/clifford.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spinorb {

/// Null 1-form on C^{2d}: e_i (unbarred) or its partner eb_i (barred), with g(e_i, eb_j) = delta_ij.
struct Label2d {
  bool barred = false;
  int index = 1;

  /// Position in the total order e_1 < ... < e_d < eb_1 < ... < eb_d.
  int slot(int half_dim) const { return barred ? half_dim + index - 1 : index - 1; }
  static Label2d from_slot(int slot, int half_dim);
  /// "e3" or "eb3".
  std::string to_string() const;
  static Label2d parse(const std::string &text);

  friend bool operator==(const Label2d &, const Label2d &) = default;
};

inline Label2d e(int i) { return {false, i}; }
inline Label2d eb(int i) { return {true, i}; }

/// Exterior form on C^{2d}; each monomial is a bitmask over the 2d label slots,
/// read as the wedge of its labels in ascending slot order.
class ExtForm {
public:
  using Mask = uint32_t;
  using Terms = std::map<Mask, GaussianRational>;

  explicit ExtForm(int half_dim);
  /// Wedge of the given labels in the given order, times c.
  static ExtForm monomial(int half_dim, const std::vector<Label2d> &labels,
                          const GaussianRational &c = GaussianRational(1));

  int half_dim() const { return d_; }
  int dim2d() const { return 2 * d_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every term has degree k (vacuously true for zero).
  bool is_homogeneous(int k) const;
  GaussianRational coeff(const std::vector<Label2d> &sorted_labels) const;
  std::vector<Label2d> labels(Mask m) const;

  void add(Mask m, const GaussianRational &c);

  ExtForm &operator+=(const ExtForm &o);
  ExtForm &operator-=(const ExtForm &o);
  ExtForm &operator*=(const GaussianRational &c);
  friend ExtForm operator+(ExtForm a, const ExtForm &b) { return a += b; }
  friend ExtForm operator-(ExtForm a, const ExtForm &b) { return a -= b; }
  friend ExtForm operator*(const GaussianRational &c, ExtForm a) { return a *= c; }
  friend bool operator==(const ExtForm &a, const ExtForm &b) { return a.d_ == b.d_ && a.terms_ == b.terms_; }

  /// "eb1^eb2 + (1/2) e1^eb1"; "0" when empty.
  std::string to_string() const;

private:
  int d_;
  Terms terms_;
};

/// Sign of the wedge of two disjoint slot masks relative to ascending order.
int mask_wedge_sign(uint32_t a, uint32_t b);

ExtForm wedge(const ExtForm &a, const ExtForm &b);

/// B_k(psi, phi): for each sorted label set L of size k, the coefficient is
/// <psi, q(L) phi> where q(L) is the antisymmetrized product of a_i (for e_i) and a_i^+ (for eb_i).
/// Normalized so that B_4(1, 1) = eb_1^eb_2^eb_3^eb_4 at d = 4.
ExtForm geometric_map(const Spinor &psi, const Spinor &phi, int k);
/// Same map computed from sorted Gamma-strings and the dual coframe
/// E^i = (e_i + eb_i)/2, E^{i+d} = -i (e_i - eb_i)/2.
ExtForm geometric_map_gamma(const Spinor &psi, const Spinor &phi, int k);
/// B_k(psi, psi).
inline ExtForm bilinear(const Spinor &psi, int k) { return geometric_map(psi, psi, k); }

/// omega = sum_i eb_i ^ e_i.
ExtForm kahler_form(int half_dim);
/// eb_1234 + e_1234 + (1/2) omega^omega in eight dimensions.
ExtForm cayley_form();

}  // namespace spinorb
