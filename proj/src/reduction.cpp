#include "spinorb/reduction.hpp"

#include "spinorb/combinatorics.hpp"

#include <map>
#include <stdexcept>

namespace spinorb {

namespace {

GaussianRational shared_radicand(const Surd &a, const Surd &b) {
  if (a.radicand.is_zero())
    return b.radicand;
  if (!b.radicand.is_zero() && !(a.radicand == b.radicand))
    throw std::invalid_argument("Surd: mismatched radicands");
  return a.radicand;
}

Surd scalar(const GaussianRational &x, const GaussianRational &radicand) { return {x, 0, radicand}; }

}  // namespace

Surd operator+(const Surd &a, const Surd &b) {
  return {a.rational + b.rational, a.irrational + b.irrational, shared_radicand(a, b)};
}

Surd operator-(const Surd &a, const Surd &b) {
  return {a.rational - b.rational, a.irrational - b.irrational, shared_radicand(a, b)};
}

Surd operator*(const Surd &a, const Surd &b) {
  const GaussianRational s = shared_radicand(a, b);
  return {a.rational * b.rational + a.irrational * b.irrational * s,
          a.rational * b.irrational + a.irrational * b.rational, s};
}

Surd Surd::inverse() const {
  const GaussianRational den = rational * rational - irrational * irrational * radicand;
  if (den.is_zero())
    throw std::domain_error("Surd: not invertible");
  return {rational / den, -irrational / den, radicand};
}

std::string Surd::to_string() const {
  if (irrational.is_zero())
    return rational.to_string();
  std::string out = rational.is_zero() ? "" : rational.to_string() + " + ";
  return out + "(" + irrational.to_string() + ")*sqrt(" + radicand.to_string() + ")";
}

Surd null_pairing(const NullCovector &u, const NullCovector &v, int half_dim) {
  Surd out{0, 0, 0};
  for (int i = 0; i < half_dim; ++i)
    out = out + u[i] * v[half_dim + i] + u[half_dim + i] * v[i];
  return out;
}

TwelveReduction reduce_12d_k4(const Configuration &c) {
  constexpr int d = 6;
  c.validate();
  if (c.half_dim != d || c.size() != 4)
    throw std::invalid_argument("reduce_12d_k4: expected four words at d=6");
  const Configuration square = Configuration::make(d, {{}, {1, 2, 3, 4}, {3, 4, 5, 6}, {1, 2, 5, 6}});
  if (!(canonical_form(c) == canonical_form(square)))
    throw std::invalid_argument("reduce_12d_k4: configuration is not of the 12D k=4 type");

  TwelveReduction out{.lambda = {}, .bbar = {}, .b = {}, .pairs = {}, .b2 = bilinear(spinor_of(c), 2),
                      .impurity_two = spinor_of(Configuration::make(d, {{}, {1, 2, 3, 4, 5, 6}})),
                      .proportional = false};

  // Each term must be eb_i^eb_j or e_i^e_j; collect (barred, unbarred) coefficients per pair.
  std::map<std::pair<int, int>, std::pair<GaussianRational, GaussianRational>> by_pair;
  for (const auto &[mask, coeff] : out.b2.terms()) {
    const auto labels = out.b2.labels(mask);
    if (labels.size() != 2 || labels[0].barred != labels[1].barred)
      throw std::invalid_argument("reduce_12d_k4: B_2 has a mixed term " + labels[0].to_string() + "^" +
                                  labels[1].to_string());
    auto &slot = by_pair[{labels[0].index, labels[1].index}];
    (labels[0].barred ? slot.first : slot.second) = coeff;
  }
  int covered = 0, n = 0;
  for (const auto &[pair, pq] : by_pair) {
    if (pq.first.is_zero() || pq.second.is_zero() || n == 3)
      throw std::invalid_argument("reduce_12d_k4: B_2 does not pair up into three planes");
    covered |= (1 << pair.first) | (1 << pair.second);
    out.pairs[n++] = pair;
  }
  if (n != 3 || covered != 0b1111110)
    throw std::invalid_argument("reduce_12d_k4: B_2 does not pair up into three planes");

  const auto &first = by_pair.begin()->second;
  const GaussianRational lambda_sq = -(first.first * first.second);
  if (lambda_sq.is_zero())
    throw std::invalid_argument("reduce_12d_k4: lambda^2 vanishes");
  GaussianRational root;
  out.lambda = exact_sqrt(lambda_sq, root) ? Surd{root, 0, lambda_sq} : Surd{0, 1, lambda_sq};
  const GaussianRational s = lambda_sq;

  const Surd zero = scalar(0, s);
  const Surd beta = scalar(1, s);
  const Surd gamma = scalar(GaussianRational(mpq_class(1, 2)), s);
  for (const auto &[pair, pq] : by_pair) {
    const auto [i, j] = pair;
    const Surd alpha = scalar(pq.first, s) * out.lambda.inverse();
    const Surd delta = (scalar(2, s) * alpha).inverse();
    auto slot = [](bool barred, int index) { return barred ? d + index - 1 : index - 1; };
    NullCovector bbar_i(2 * d, zero), b_i(2 * d, zero), bbar_j(2 * d, zero), b_j(2 * d, zero);
    bbar_i[slot(true, i)] = alpha;
    bbar_i[slot(false, j)] = beta;
    b_i[slot(true, j)] = gamma;
    b_i[slot(false, i)] = delta;
    bbar_j[slot(true, j)] = alpha;
    bbar_j[slot(false, i)] = zero - beta;
    b_j[slot(false, j)] = delta;
    b_j[slot(true, i)] = zero - gamma;
    out.bbar[i - 1] = bbar_i;
    out.b[i - 1] = b_i;
    out.bbar[j - 1] = bbar_j;
    out.b[j - 1] = b_j;
  }

  // lambda * sum_i bbar_i ^ b_i, as slot-pair coefficients.
  std::map<ExtForm::Mask, Surd> target;
  for (int k = 0; k < d; ++k)
    for (int x = 0; x < 2 * d; ++x)
      for (int y = x + 1; y < 2 * d; ++y) {
        const Surd w = out.bbar[k][x] * out.b[k][y] - out.bbar[k][y] * out.b[k][x];
        if (w.is_zero())
          continue;
        auto [it, inserted] = target.try_emplace((1u << x) | (1u << y), zero);
        it->second = it->second + out.lambda * w;
      }
  bool ok = true;
  for (const auto &[mask, v] : target) {
    auto it = out.b2.terms().find(mask);
    const GaussianRational expected = it == out.b2.terms().end() ? GaussianRational() : it->second;
    ok = ok && v.irrational.is_zero() && v.rational == expected;
  }
  for (const auto &[mask, coeff] : out.b2.terms()) {
    auto it = target.find(mask);
    ok = ok && it != target.end();
  }
  out.proportional = ok;
  return out;
}

}  // namespace spinorb
