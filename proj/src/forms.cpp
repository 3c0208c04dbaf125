#include "spinorb/forms.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace spinorb {

Label2d Label2d::from_slot(int slot, int half_dim) {
  if (slot < 0 || slot >= 2 * half_dim)
    throw DimensionError("label slot out of range");
  return slot < half_dim ? Label2d{false, slot + 1} : Label2d{true, slot - half_dim + 1};
}

std::string Label2d::to_string() const { return (barred ? "eb" : "e") + std::to_string(index); }

Label2d Label2d::parse(const std::string &text) {
  Label2d out;
  size_t pos = 0;
  if (text.rfind("eb", 0) == 0) {
    out.barred = true;
    pos = 2;
  } else if (text.rfind("e", 0) == 0) {
    pos = 1;
  } else {
    throw std::invalid_argument("bad form label '" + text + "'");
  }
  const std::string digits = text.substr(pos);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 3)
    throw std::invalid_argument("bad form label '" + text + "'");
  out.index = std::stoi(digits);
  if (out.index < 1)
    throw std::invalid_argument("bad form label '" + text + "'");
  return out;
}

int mask_wedge_sign(uint32_t a, uint32_t b) {
  int inversions = 0;
  for (uint32_t rest = b; rest; rest &= rest - 1) {
    const int y = std::countr_zero(rest);
    inversions += std::popcount(static_cast<uint32_t>(static_cast<uint64_t>(a) >> (y + 1)));
  }
  return (inversions & 1) ? -1 : 1;
}

ExtForm::ExtForm(int half_dim) : d_(half_dim) {
  if (half_dim < 1 || half_dim > kMaxHalfDim)
    throw DimensionError("ExtForm: half dimension out of range");
}

ExtForm ExtForm::monomial(int half_dim, const std::vector<Label2d> &labels, const GaussianRational &c) {
  ExtForm out(half_dim);
  Mask mask = 0;
  int sign = 1;
  for (const Label2d &l : labels) {
    if (l.index < 1 || l.index > half_dim)
      throw DimensionError("ExtForm: label " + l.to_string() + " out of range");
    const Mask bit = Mask{1} << l.slot(half_dim);
    if (mask & bit)
      return out;
    sign *= mask_wedge_sign(mask, bit);
    mask |= bit;
  }
  out.add(mask, sign == 1 ? c : -c);
  return out;
}

bool ExtForm::is_homogeneous(int k) const {
  return std::all_of(terms_.begin(), terms_.end(), [k](const auto &t) { return std::popcount(t.first) == k; });
}

GaussianRational ExtForm::coeff(const std::vector<Label2d> &sorted_labels) const {
  Mask mask = 0;
  for (const Label2d &l : sorted_labels)
    mask |= Mask{1} << l.slot(d_);
  auto it = terms_.find(mask);
  return it == terms_.end() ? GaussianRational() : it->second;
}

std::vector<Label2d> ExtForm::labels(Mask m) const {
  std::vector<Label2d> out;
  for (; m; m &= m - 1)
    out.push_back(Label2d::from_slot(std::countr_zero(m), d_));
  return out;
}

void ExtForm::add(Mask m, const GaussianRational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

ExtForm &ExtForm::operator+=(const ExtForm &o) {
  if (o.d_ != d_)
    throw DimensionError("ExtForm: dimension mismatch");
  for (const auto &[m, c] : o.terms_)
    add(m, c);
  return *this;
}

ExtForm &ExtForm::operator-=(const ExtForm &o) {
  if (o.d_ != d_)
    throw DimensionError("ExtForm: dimension mismatch");
  for (const auto &[m, c] : o.terms_)
    add(m, -c);
  return *this;
}

ExtForm &ExtForm::operator*=(const GaussianRational &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, v] : terms_)
    v *= c;
  return *this;
}

std::string ExtForm::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    std::string coeff = c.to_string();
    const bool negative = c.is_real() && coeff.front() == '-';
    if (negative)
      coeff.erase(0, 1);
    if (!first)
      os << (negative ? " - " : " + ");
    else if (negative)
      os << "-";
    first = false;
    std::string word;
    for (const Label2d &l : labels(m))
      word += (word.empty() ? "" : "^") + l.to_string();
    if (word.empty()) {
      os << coeff;
      continue;
    }
    if (coeff != "1")
      os << (c.is_real() && coeff.find('/') == std::string::npos ? coeff : "(" + coeff + ")") << " ";
    os << word;
  }
  return os.str();
}

ExtForm wedge(const ExtForm &a, const ExtForm &b) {
  if (a.half_dim() != b.half_dim())
    throw DimensionError("wedge: dimension mismatch");
  ExtForm out(a.half_dim());
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms()) {
      if (ma & mb)
        continue;
      const GaussianRational c = ca * cb;
      out.add(ma | mb, mask_wedge_sign(ma, mb) == 1 ? c : -c);
    }
  return out;
}

namespace {

void check_pair(const Spinor &psi, const Spinor &phi, int k) {
  if (psi.half_dim() != phi.half_dim())
    throw DimensionError("geometric_map: dimension mismatch");
  if (k < 0 || k > 2 * psi.half_dim())
    throw std::out_of_range("geometric_map: degree " + std::to_string(k) + " outside 0..2d");
}

// Masks with exactly k of the low n bits set, ascending.
std::vector<uint32_t> subsets_of_size(int n, int k) {
  std::vector<uint32_t> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  if (k > n)
    return out;
  uint64_t m = (uint64_t{1} << k) - 1;
  const uint64_t limit = uint64_t{1} << n;
  while (m < limit) {
    out.push_back(static_cast<uint32_t>(m));
    const uint64_t low = m & -m;
    const uint64_t ripple = m + low;
    m = (((ripple ^ m) >> 2) / low) | ripple;
  }
  return out;
}

// Diagonal operator (a_i a_i^+ - a_i^+ a_i) / 2: +1/2 on terms without i, -1/2 on terms with i.
Spinor half_commutator(int i, const Spinor &phi) {
  static const GaussianRational half(mpq_class(1, 2));
  Spinor out(phi.half_dim());
  for (const auto &[s, c] : phi.terms())
    out.add(s, s.contains(i) ? -(half * c) : half * c);
  return out;
}

}  // namespace

ExtForm geometric_map(const Spinor &psi, const Spinor &phi, int k) {
  check_pair(psi, phi, k);
  const int d = psi.half_dim();
  ExtForm out(d);
  for (uint32_t mask : subsets_of_size(2 * d, k)) {
    const uint32_t ann = mask & ((1u << d) - 1u);
    const uint32_t cre = static_cast<uint32_t>(static_cast<uint64_t>(mask) >> d);

    // Regroup the sorted labels into per-index blocks (e_i before eb_i) and track the sign.
    std::vector<int> order;
    for (int i = 1; i <= d; ++i) {
      if (ann >> (i - 1) & 1u)
        order.push_back(i - 1);
      if (cre >> (i - 1) & 1u)
        order.push_back(d + i - 1);
    }
    int inversions = 0;
    for (size_t x = 0; x < order.size(); ++x)
      for (size_t y = x + 1; y < order.size(); ++y)
        inversions += order[x] > order[y];

    Spinor v = phi;
    for (int i = d; i >= 1 && !v.is_zero(); --i) {
      const bool has_ann = ann >> (i - 1) & 1u;
      const bool has_cre = cre >> (i - 1) & 1u;
      if (has_ann && has_cre)
        v = half_commutator(i, v);
      else if (has_ann)
        v = annihilate(i, v);
      else if (has_cre)
        v = create(i, v);
    }
    if (v.is_zero())
      continue;
    const GaussianRational c = inner(psi, v);
    out.add(mask, (inversions & 1) ? -c : c);
  }
  return out;
}

ExtForm geometric_map_gamma(const Spinor &psi, const Spinor &phi, int k) {
  check_pair(psi, phi, k);
  const int d = psi.half_dim();
  const GaussianRational half(mpq_class(1, 2));
  const GaussianRational minus_half_i(0, mpq_class(-1, 2));
  std::vector<ExtForm> coframe;
  for (int a = 1; a <= 2 * d; ++a) {
    if (a <= d)
      coframe.push_back(ExtForm::monomial(d, {e(a)}, half) + ExtForm::monomial(d, {eb(a)}, half));
    else
      coframe.push_back(ExtForm::monomial(d, {e(a - d)}, minus_half_i) -
                        ExtForm::monomial(d, {eb(a - d)}, minus_half_i));
  }

  ExtForm out(d);
  for (uint32_t mask : subsets_of_size(2 * d, k)) {
    Spinor v = phi;
    for (int a = 2 * d; a >= 1 && !v.is_zero(); --a)
      if (mask >> (a - 1) & 1u)
        v = gamma(a, v);
    if (v.is_zero())
      continue;
    const GaussianRational c = inner(psi, v);
    if (c.is_zero())
      continue;
    ExtForm term = ExtForm::monomial(d, {}, c);
    for (uint32_t rest = mask; rest; rest &= rest - 1)
      term = wedge(term, coframe[std::countr_zero(rest)]);
    out += term;
  }
  return out;
}

ExtForm kahler_form(int half_dim) {
  ExtForm out(half_dim);
  for (int i = 1; i <= half_dim; ++i)
    out += ExtForm::monomial(half_dim, {eb(i), e(i)});
  return out;
}

ExtForm cayley_form() {
  const ExtForm omega = kahler_form(4);
  return ExtForm::monomial(4, {eb(1), eb(2), eb(3), eb(4)}) + ExtForm::monomial(4, {e(1), e(2), e(3), e(4)}) +
         GaussianRational(mpq_class(1, 2)) * wedge(omega, omega);
}

}  // namespace spinorb
