#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

namespace spinorb {

/// Exact element of Q(i): re + i*im with arbitrary-precision rational parts.
///
/// mpq_class keeps both parts in lowest terms with a positive denominator,
/// so structural equality is value equality.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// From numerator/denominator pairs. Throws std::invalid_argument on a zero
  /// denominator.
  static GaussianRational from_parts(const mpz_class &re_num, const mpz_class &re_den,
                                     const mpz_class &im_num, const mpz_class &im_den);
  /// Decimal-string form used by the JSON interchange: [re_num, re_den, im_num, im_den].
  static GaussianRational from_strings(const std::array<std::string, 4> &parts);
  static GaussianRational i();

  const mpq_class &re() const { return re_; }
  const mpq_class &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational &operator+=(const GaussianRational &o);
  GaussianRational &operator-=(const GaussianRational &o);
  GaussianRational &operator*=(const GaussianRational &o);
  GaussianRational &operator/=(const GaussianRational &o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::array<std::string, 4> to_strings() const;
  /// Human-readable form: "3/2", "-i", "1+2i", "(1/2)-(3/4)i".
  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Exact square root in Q(i) when one exists; the root returned has positive
/// real part, or positive imaginary part when the real part is zero.
bool exact_sqrt(const GaussianRational &z, GaussianRational &root);

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool exact_sqrt(const mpq_class &q, mpq_class &root);

}  // namespace spinorb
