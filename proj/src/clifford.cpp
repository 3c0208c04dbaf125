#include "spinorb/clifford.hpp"

#include <sstream>

namespace spinorb {

IndexSet IndexSet::of(const std::vector<int> &indices) {
  uint32_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxHalfDim)
      throw DimensionError("IndexSet: index " + std::to_string(i) + " out of range");
    const uint32_t bit = 1u << (i - 1);
    if (bits & bit)
      throw std::invalid_argument("IndexSet: repeated index " + std::to_string(i));
    bits |= bit;
  }
  return IndexSet(bits);
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (uint32_t b = bits_; b; b &= b - 1)
    out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string IndexSet::to_string() const {
  std::string out;
  for (int i : indices()) {
    if (!out.empty() && i > 9)
      out += ',';
    out += std::to_string(i);
  }
  return out;
}

int wedge_sign(IndexSet s, IndexSet t) {
  // Count pairs (x in S, y in T) with x > y: each is one transposition.
  int inversions = 0;
  for (uint32_t b = t.bits(); b; b &= b - 1) {
    const int y = std::countr_zero(b);
    inversions += std::popcount(s.bits() >> (y + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

namespace {

void check_half_dim(int d) {
  if (d < 1 || d > kMaxHalfDim)
    throw DimensionError("half dimension " + std::to_string(d) + " outside 1.." +
                         std::to_string(kMaxHalfDim));
}

void check_index(int i, int d) {
  if (i < 1 || i > d)
    throw DimensionError("index " + std::to_string(i) + " outside 1.." + std::to_string(d));
}

}  // namespace

Spinor::Spinor(int half_dim) : d_(half_dim) { check_half_dim(half_dim); }

Spinor::Spinor(int half_dim, Terms terms) : d_(half_dim) {
  check_half_dim(half_dim);
  for (auto &[s, c] : terms) {
    if ((s.bits() & ~top().bits()) != 0)
      throw DimensionError("Spinor: index set " + s.to_string() + " exceeds d=" + std::to_string(d_));
    if (!c.is_zero())
      terms_.emplace(s, std::move(c));
  }
}

Spinor Spinor::vacuum(int half_dim) {
  Spinor out(half_dim);
  out.terms_.emplace(IndexSet(), GaussianRational(1));
  return out;
}

bool Spinor::is_even() const {
  for (const auto &[s, c] : terms_)
    if (s.size() % 2)
      return false;
  return true;
}

GaussianRational Spinor::coeff(IndexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void Spinor::add(IndexSet s, const GaussianRational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Spinor &Spinor::operator+=(const Spinor &o) {
  if (o.d_ != d_)
    throw DimensionError("Spinor: dimension mismatch");
  for (const auto &[s, c] : o.terms_)
    add(s, c);
  return *this;
}

Spinor &Spinor::operator-=(const Spinor &o) {
  if (o.d_ != d_)
    throw DimensionError("Spinor: dimension mismatch");
  for (const auto &[s, c] : o.terms_)
    add(s, -c);
  return *this;
}

Spinor &Spinor::operator*=(const GaussianRational &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[s, v] : terms_)
    v *= c;
  return *this;
}

std::string Spinor::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[s, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = coeff.front() == '-' && c.is_real();
    if (negative)
      coeff.erase(0, 1);
    if (!first)
      os << (negative ? " - " : " + ");
    else if (negative)
      os << "-";
    first = false;
    const bool unit = coeff == "1";
    if (s.empty()) {
      os << coeff;
    } else {
      if (!unit)
        os << (c.is_real() ? coeff : "(" + coeff + ")") << " ";
      os << "e^{" << s.to_string() << "}";
    }
  }
  return os.str();
}

Vector2d Vector2d::annihilator(int half_dim, int i) {
  check_index(i, half_dim);
  Vector2d v(half_dim);
  v.ann[i - 1] = 1;
  return v;
}

Vector2d Vector2d::creator(int half_dim, int i) {
  check_index(i, half_dim);
  Vector2d v(half_dim);
  v.cre[i - 1] = 1;
  return v;
}

Vector2d Vector2d::gamma(int half_dim, int a) {
  check_index(a, 2 * half_dim);
  Vector2d v(half_dim);
  if (a <= half_dim) {
    v.ann[a - 1] = 1;
    v.cre[a - 1] = 1;
  } else {
    v.ann[a - half_dim - 1] = GaussianRational::i();
    v.cre[a - half_dim - 1] = -GaussianRational::i();
  }
  return v;
}

bool Vector2d::is_zero() const {
  for (int i = 0; i < half_dim(); ++i)
    if (!ann[i].is_zero() || !cre[i].is_zero())
      return false;
  return true;
}

GaussianRational metric(const Vector2d &u, const Vector2d &v) {
  if (u.half_dim() != v.half_dim())
    throw DimensionError("metric: dimension mismatch");
  GaussianRational g;
  for (int i = 0; i < u.half_dim(); ++i)
    g += u.ann[i] * v.cre[i] + u.cre[i] * v.ann[i];
  return g;
}

Spinor create(int i, const Spinor &psi) {
  check_index(i, psi.half_dim());
  Spinor out(psi.half_dim());
  for (const auto &[s, c] : psi.terms()) {
    if (s.contains(i))
      continue;
    out.add(s.with(i), (s.count_below(i) & 1) ? -c : c);
  }
  return out;
}

Spinor annihilate(int i, const Spinor &psi) {
  check_index(i, psi.half_dim());
  Spinor out(psi.half_dim());
  for (const auto &[s, c] : psi.terms()) {
    if (!s.contains(i))
      continue;
    out.add(s.without(i), (s.count_below(i) & 1) ? -c : c);
  }
  return out;
}

Spinor clifford_mul(const Vector2d &v, const Spinor &psi) {
  if (v.half_dim() != psi.half_dim())
    throw DimensionError("clifford_mul: dimension mismatch");
  Spinor out(psi.half_dim());
  for (int i = 1; i <= psi.half_dim(); ++i) {
    if (!v.ann[i - 1].is_zero())
      out += v.ann[i - 1] * annihilate(i, psi);
    if (!v.cre[i - 1].is_zero())
      out += v.cre[i - 1] * create(i, psi);
  }
  return out;
}

Spinor gamma(int a, const Spinor &psi) { return clifford_mul(Vector2d::gamma(psi.half_dim(), a), psi); }

Spinor reversal(const Spinor &psi) {
  Spinor out(psi.half_dim());
  for (const auto &[s, c] : psi.terms())
    out.add(s, reversal_sign(s.size()) == 1 ? c : -c);
  return out;
}

GaussianRational inner(const Spinor &psi, const Spinor &phi) {
  if (psi.half_dim() != phi.half_dim())
    throw DimensionError("inner: dimension mismatch");
  const IndexSet top = psi.top();
  GaussianRational total;
  for (const auto &[s, c] : psi.terms()) {
    const IndexSet complement(top.bits() & ~s.bits());
    auto it = phi.terms().find(complement);
    if (it == phi.terms().end())
      continue;
    const int sign = wedge_sign(s, complement) * reversal_sign(complement.size());
    GaussianRational term = c * it->second;
    total += sign == 1 ? term : -term;
  }
  return total;
}

Spinor basis_pure(IndexSet s, int half_dim) {
  if (s.size() % 2)
    throw std::invalid_argument("basis_pure: odd index set {" + s.to_string() +
                                "} does not lie in S^+");
  Spinor out(half_dim, {{s, GaussianRational(1)}});
  return out;
}

}  // namespace spinorb
