#include "spinorb/configuration.hpp"

#include <set>
#include <stdexcept>

namespace spinorb {

Configuration Configuration::make(int half_dim, const std::vector<std::vector<int>> &words,
                                  std::vector<GaussianRational> coeffs) {
  Configuration c;
  c.half_dim = half_dim;
  for (const auto &w : words)
    c.words.push_back(IndexSet::of(w));
  c.coeffs = std::move(coeffs);
  c.validate();
  return c;
}

void Configuration::validate() const {
  if (half_dim < 1 || half_dim > kMaxHalfDim)
    throw DimensionError("configuration: half dimension out of range");
  const uint32_t top = (1u << half_dim) - 1u;
  std::set<IndexSet> seen;
  for (IndexSet w : words) {
    if (w.bits() & ~top)
      throw DimensionError("configuration: word {" + w.to_string() + "} exceeds d=" + std::to_string(half_dim));
    if (w.size() % 2)
      throw std::invalid_argument("configuration: odd word {" + w.to_string() + "}");
    if (!seen.insert(w).second)
      throw std::invalid_argument("configuration: repeated word {" + w.to_string() + "}");
  }
  if (!coeffs.empty() && coeffs.size() != words.size())
    throw std::invalid_argument("configuration: coefficient count does not match word count");
  for (const auto &c : coeffs)
    if (c.is_zero())
      throw std::invalid_argument("configuration: zero coefficient");
}

Spinor spinor_of(const Configuration &c) {
  if (c.words.empty())
    throw std::invalid_argument("spinor_of: empty configuration");
  c.validate();
  Spinor out(c.half_dim);
  for (int alpha = 0; alpha < c.size(); ++alpha)
    out.add(c.words[alpha], c.coeff(alpha));
  return out;
}

}  // namespace spinorb
