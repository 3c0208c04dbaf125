#include "spinorb/gaussian_rational.hpp"

#include <stdexcept>

namespace spinorb {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_parts(const mpz_class &re_num, const mpz_class &re_den,
                                              const mpz_class &im_num, const mpz_class &im_den) {
  if (re_den == 0 || im_den == 0)
    throw std::invalid_argument("GaussianRational: zero denominator");
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

GaussianRational GaussianRational::from_strings(const std::array<std::string, 4> &parts) {
  mpz_class z[4];
  for (int k = 0; k < 4; ++k) {
    if (parts[k].empty() || z[k].set_str(parts[k], 10) != 0)
      throw std::invalid_argument("GaussianRational: not a decimal integer: '" + parts[k] + "'");
  }
  return from_parts(z[0], z[1], z[2], z[3]);
}

GaussianRational GaussianRational::i() { return {0, 1}; }

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o) {
  if (o.is_zero())
    throw std::domain_error("GaussianRational: division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::array<std::string, 4> GaussianRational::to_strings() const {
  return {re_.get_num().get_str(), re_.get_den().get_str(), im_.get_num().get_str(),
          im_.get_den().get_str()};
}

namespace {

std::string part(const mpq_class &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return "(" + q.get_str() + ")";
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0)
    return re_.get_str();
  std::string im;
  if (im_ == 1)
    im = "i";
  else if (im_ == -1)
    im = "-i";
  else
    im = part(im_) + "i";
  if (sgn(re_) == 0)
    return im;
  std::string out = part(re_);
  if (im.front() == '-')
    out += im;
  else
    out += "+" + im;
  return out;
}

bool exact_sqrt(const mpq_class &q, mpq_class &root) {
  if (sgn(q) < 0)
    return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = mpq_class(rn, rd);
  root.canonicalize();
  return true;
}

bool exact_sqrt(const GaussianRational &z, GaussianRational &root) {
  // sqrt(x+iy) = p + iq with p = sqrt((r+x)/2), q = sign(y) sqrt((r-x)/2), r = |z|.
  mpq_class r;
  if (!exact_sqrt(z.norm(), r))
    return false;
  mpq_class p, q;
  if (!exact_sqrt(mpq_class((r + z.re()) / 2), p) || !exact_sqrt(mpq_class((r - z.re()) / 2), q))
    return false;
  if (sgn(z.im()) < 0)
    q = -q;
  if (sgn(p) == 0 && sgn(q) < 0)
    q = -q;
  root = GaussianRational(p, q);
  return true;
}

}  // namespace spinorb
