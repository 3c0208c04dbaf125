#pragma once

#include "spinorb/gaussian_rational.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinorb {

/// Largest half-dimension d supported by the bitmask encodings.
inline constexpr int kMaxHalfDim = 16;

/// Thrown when operands live in different dimensions or an index is out of range.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Subset of {1,...,d}; index i is stored in bit i-1.
class IndexSet {
public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(uint32_t bits) : bits_(bits) {}
  static IndexSet of(const std::vector<int> &indices);

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Number of members strictly smaller than i.
  constexpr int count_below(int i) const { return std::popcount(bits_ & ((1u << (i - 1)) - 1u)); }
  constexpr IndexSet with(int i) const { return IndexSet(bits_ | (1u << (i - 1))); }
  constexpr IndexSet without(int i) const { return IndexSet(bits_ & ~(1u << (i - 1))); }
  /// Ascending member list.
  std::vector<int> indices() const;
  std::string to_string() const;

  friend constexpr bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

private:
  uint32_t bits_ = 0;
};

/// Sign of e^S ^ e^T for disjoint S, T, relative to the ascending order of S u T.
int wedge_sign(IndexSet s, IndexSet t);

/// An exterior form on C^d read as a spinor: a_{i1}^+ ... a_{ik}^+ psi_0 ~ e^{i1...ik}.
///
/// Elements of S^+ have only even-degree terms. Odd terms are allowed so that
/// intermediate results of Clifford products (which pass through S^-) can be
/// represented; see is_even().
class Spinor {
public:
  using Terms = std::map<IndexSet, GaussianRational>;

  explicit Spinor(int half_dim);
  /// Zero coefficients in `terms` are dropped.
  Spinor(int half_dim, Terms terms);

  static Spinor vacuum(int half_dim);

  int half_dim() const { return d_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_even() const;
  /// Coefficient of e^S (zero when absent).
  GaussianRational coeff(IndexSet s) const;
  IndexSet top() const { return IndexSet((1u << d_) - 1u); }

  /// Accumulate c * e^S, purging the entry if it cancels.
  void add(IndexSet s, const GaussianRational &c);

  Spinor &operator+=(const Spinor &o);
  Spinor &operator-=(const Spinor &o);
  Spinor &operator*=(const GaussianRational &c);
  friend Spinor operator+(Spinor a, const Spinor &b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor &b) { return a -= b; }
  friend Spinor operator*(const GaussianRational &c, Spinor a) { return a *= c; }
  friend bool operator==(const Spinor &a, const Spinor &b) { return a.d_ == b.d_ && a.terms_ == b.terms_; }

  /// e.g. "1 + e^{1234}" or "2 e^{12} - i e^{34}"; "0" when empty.
  std::string to_string() const;

private:
  int d_;
  Terms terms_;
};

/// Element of C^{2d} in the null basis: sum_i ann[i] a_i + cre[i] a_i^+.
struct Vector2d {
  std::vector<GaussianRational> ann;
  std::vector<GaussianRational> cre;

  explicit Vector2d(int half_dim) : ann(half_dim), cre(half_dim) {}
  int half_dim() const { return static_cast<int>(ann.size()); }
  static Vector2d annihilator(int half_dim, int i);
  static Vector2d creator(int half_dim, int i);
  /// Orthonormal-style generator: Gamma_a = a_a + a_a^+ (a <= d), i(a_{a-d} - a_{a-d}^+) (a > d).
  static Vector2d gamma(int half_dim, int a);
  bool is_zero() const;

  friend bool operator==(const Vector2d &, const Vector2d &) = default;
};

/// Metric of the canonical null basis: g(a_i, a_j) = g(a_i^+, a_j^+) = 0, g(a_i, a_j^+) = delta_ij.
GaussianRational metric(const Vector2d &u, const Vector2d &v);

/// a_i^+: wedge e^i from the left. Throws DimensionError if i is outside 1..d.
Spinor create(int i, const Spinor &psi);
/// a_i: contraction removing e^i with the alternating sign of its slot.
Spinor annihilate(int i, const Spinor &psi);
/// Clifford product of a vector with a spinor.
Spinor clifford_mul(const Vector2d &v, const Spinor &psi);
/// Gamma_a psi for a in 1..2d.
Spinor gamma(int a, const Spinor &psi);
/// sigma: e^{i1...ik} -> e^{ik...i1}, i.e. multiply degree-k terms by (-1)^{k(k-1)/2}.
Spinor reversal(const Spinor &psi);
/// <psi, phi> = coefficient of e^{1...d} in psi ^ sigma(phi).
GaussianRational inner(const Spinor &psi, const Spinor &phi);
/// e^S with unit coefficient; S must have even size.
Spinor basis_pure(IndexSet s, int half_dim);

/// Sign (+1/-1) of reversing a k-fold wedge.
constexpr int reversal_sign(int k) { return ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1; }

}  // namespace spinorb
