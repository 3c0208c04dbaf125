#include "spinorb/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

namespace spinorb {

namespace {

uint32_t top_mask(int d) { return (d >= 32) ? ~0u : (1u << d) - 1u; }

long binom(long n, long r) {
  if (r < 0 || n < r)
    return 0;
  long out = 1;
  for (long i = 1; i <= r; ++i)
    out = out * (n - r + i) / i;
  return out;
}

int agreements(uint32_t a, uint32_t b, uint32_t c, uint32_t w, int d) {
  return std::popcount(~((a ^ w) | (b ^ w) | (c ^ w)) & top_mask(d));
}

}  // namespace

OccupationProfile occupation_profile(const Configuration &c) {
  c.validate();
  const int k = c.size();
  OccupationProfile out{std::vector<int>(k + 1, 0)};
  for (int i = 1; i <= c.half_dim; ++i) {
    const int with = static_cast<int>(std::count_if(c.words.begin(), c.words.end(),
                                                    [i](IndexSet w) { return w.contains(i); }));
    ++out.n[with];       // box a_i^+
    ++out.n[k - with];   // box a_i
  }
  return out;
}

EdgeLabels edge_dims(const Configuration &c) {
  c.validate();
  EdgeLabels out;
  for (int a = 0; a < c.size(); ++a)
    for (int b = a + 1; b < c.size(); ++b)
      out[{a, b}] = c.half_dim - std::popcount(c.words[a].bits() ^ c.words[b].bits());
  return out;
}

TetraLabels tetra_dims(const Configuration &c) {
  c.validate();
  TetraLabels out;
  const int k = c.size();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int x = b + 1; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
          out[{a, b, x, y}] = agreements(c.words[a].bits(), c.words[b].bits(), c.words[x].bits(),
                                         c.words[y].bits(), c.half_dim);
  return out;
}

IdentityReport check_identities(const Configuration &c) {
  const OccupationProfile p = occupation_profile(c);
  const int k = c.size();
  IdentityReport r;
  r.boxes_expected = 2 * c.half_dim;
  r.weighted_expected = k * c.half_dim;
  for (int j = 0; j <= k; ++j) {
    r.boxes += p.n[j];
    r.weighted += j * p.n[j];
    r.dual = r.dual && p.n[j] == p.n[k - j];
    r.edge_lhs += binom(j, 2) * p.n[j];
    r.tetra_lhs += binom(j, 4) * p.n[j];
  }
  for (const auto &[pair, e] : edge_dims(c))
    r.edge_rhs += e;
  for (const auto &[quad, t] : tetra_dims(c))
    r.tetra_rhs += t;
  return r;
}

bool is_irreducible(const Configuration &c) {
  for (const auto &[pair, e] : edge_dims(c))
    if (e > c.half_dim - 4)
      return false;
  if (c.size() >= 4)
    for (const auto &[quad, t] : tetra_dims(c))
      if (t > c.half_dim - 7)
        return false;
  return true;
}

namespace {

constexpr int kScanLimit = 1 << 14;

bool odd_edge_rule(int d, long k) { return k <= 1 || k * (d - 8) + d >= 0; }
bool even_edge_rule(int d, long k) { return k * (d - 8) + 8 >= 0; }
bool odd_tetra_rule(int d, long k) { return k <= 3 || k * k * (28 - 3 * d) - 56 * k + 15 * d <= 0; }
bool even_tetra_rule(int d, long k) {
  return k <= 2 || k * k * (28 - 3 * d) - k * (112 - 6 * d) + 12 * d + 84 <= 0;
}

template <class Pred>
std::optional<int> largest(bool odd, Pred ok) {
  int best = 0;
  for (int k = odd ? 1 : 2; k <= kScanLimit; k += 2)
    if (ok(k))
      best = k;
  if (best + 2 > kScanLimit)
    return std::nullopt;
  return best;
}

}  // namespace

KBounds feasible_k_bounds(int half_dim) {
  if (half_dim < 2)
    throw DimensionError("feasible_k_bounds: d must be at least 2");
  const int d = half_dim;
  const bool tetra = d >= 7;
  KBounds out;
  out.half_dim = d;
  out.rules.push_back({"edge", true, largest(true, [d](int k) { return odd_edge_rule(d, k); })});
  out.rules.push_back({"edge", false, largest(false, [d](int k) { return even_edge_rule(d, k); })});
  if (tetra) {
    out.rules.push_back({"tetra", true, largest(true, [d](int k) { return odd_tetra_rule(d, k); })});
    out.rules.push_back({"tetra", false, largest(false, [d](int k) { return even_tetra_rule(d, k); })});
  }
  out.max_odd = largest(true, [&](int k) { return odd_edge_rule(d, k) && (!tetra || odd_tetra_rule(d, k)); });
  out.max_even = largest(false, [&](int k) { return even_edge_rule(d, k) && (!tetra || even_tetra_rule(d, k)); });
  return out;
}

Configuration CombinatorialType::representative() const {
  Configuration c;
  c.half_dim = half_dim;
  for (uint32_t w : code)
    c.words.emplace_back(w);
  return c;
}

std::string CombinatorialType::code_string() const {
  std::ostringstream os;
  os << half_dim << ":" << std::hex;
  for (size_t i = 0; i < code.size(); ++i)
    os << (i ? "," : "") << code[i];
  return os.str();
}

std::vector<int> CombinatorialType::edge_multiset() const {
  std::vector<int> out;
  for (const auto &[pair, e] : edges)
    out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// All permutations of d coordinates, as word lookup tables when d is small.
class PermutationTable {
public:
  explicit PermutationTable(int d) : d_(d) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    const size_t words = size_t{1} << d;
    do {
      for (size_t w = 0; w < words; ++w) {
        uint32_t img = 0;
        for (int b = 0; b < d; ++b)
          if (w >> b & 1u)
            img |= 1u << p[b];
        table_.push_back(static_cast<uint16_t>(img));
      }
      ++count_;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  size_t count() const { return count_; }
  const uint16_t *row(size_t perm) const { return table_.data() + perm * (size_t{1} << d_); }

  static const PermutationTable &get(int d) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<PermutationTable>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[d];
    if (!slot)
      slot = std::make_unique<PermutationTable>(d);
    return *slot;
  }

private:
  int d_;
  size_t count_ = 0;
  std::vector<uint16_t> table_;
};

constexpr int kTableLimit = 8;

std::vector<uint32_t> canonical_words(int d, const std::vector<uint32_t> &words) {
  const size_t k = words.size();
  std::vector<uint32_t> best, cur(k), shifted(k);
  if (k == 0)
    return best;
  auto consider = [&] {
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best)
      best = cur;
  };
  if (d <= kTableLimit) {
    const PermutationTable &table = PermutationTable::get(d);
    for (uint32_t t : words) {
      for (size_t i = 0; i < k; ++i)
        shifted[i] = words[i] ^ t;
      for (size_t p = 0; p < table.count(); ++p) {
        const uint16_t *row = table.row(p);
        for (size_t i = 0; i < k; ++i)
          cur[i] = row[shifted[i]];
        consider();
      }
    }
    return best;
  }
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (uint32_t t : words) {
      for (size_t i = 0; i < k; ++i) {
        const uint32_t w = words[i] ^ t;
        uint32_t img = 0;
        for (int b = 0; b < d; ++b)
          if (w >> b & 1u)
            img |= 1u << p[b];
        cur[i] = img;
      }
      consider();
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

CombinatorialType type_of(int d, std::vector<uint32_t> code) {
  CombinatorialType t;
  t.half_dim = d;
  t.code = std::move(code);
  const Configuration rep = t.representative();
  t.edges = edge_dims(rep);
  t.tetras = tetra_dims(rep);
  return t;
}

}  // namespace

CombinatorialType canonical_form(const Configuration &c) {
  c.validate();
  if (c.words.empty())
    throw std::invalid_argument("canonical_form: empty configuration");
  std::vector<uint32_t> words;
  for (IndexSet w : c.words)
    words.push_back(w.bits());
  return type_of(c.half_dim, canonical_words(c.half_dim, words));
}

uint64_t default_node_budget() {
  constexpr uint64_t kDefault = 100'000'000;
  const char *env = std::getenv("SPINOR_NODE_BUDGET");
  if (!env || !*env)
    return kDefault;
  char *end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0)
    return kDefault;
  return v;
}

std::vector<CombinatorialType> enumerate_types(int half_dim, int k, const EnumerationOptions &options) {
  const int d = half_dim;
  if (d < 1 || d > kMaxHalfDim)
    throw DimensionError("enumerate_types: half dimension out of range");
  if (k < 1 || (d < 31 && k > (1L << (d - 1))))
    throw std::invalid_argument("enumerate_types: k outside 1..2^(d-1)");

  std::vector<uint32_t> candidates;
  for (uint32_t w = 1; w <= top_mask(d); ++w)
    if (std::popcount(w) % 2 == 0 && std::popcount(w) >= 4)
      candidates.push_back(w);

  std::vector<std::vector<uint32_t>> found;
  std::vector<uint32_t> chosen{0};
  uint64_t nodes = 0;
  const bool tetra = options.require_irreducible;

  auto fits = [&](uint32_t w) {
    for (uint32_t c : chosen)
      if (std::popcount(c ^ w) < 4)
        return false;
    if (!tetra || chosen.size() < 3)
      return true;
    for (size_t a = 0; a < chosen.size(); ++a)
      for (size_t b = a + 1; b < chosen.size(); ++b)
        for (size_t x = b + 1; x < chosen.size(); ++x)
          if (agreements(chosen[a], chosen[b], chosen[x], w, d) > d - 7)
            return false;
    return true;
  };

  auto search = [&](auto &self, size_t start) -> void {
    if (++nodes > options.node_budget)
      throw BudgetExceeded("enumerate_types: node budget of " + std::to_string(options.node_budget) +
                           " exhausted at d=" + std::to_string(d) + ", k=" + std::to_string(k));
    if (static_cast<int>(chosen.size()) == k) {
      found.push_back(chosen);
      return;
    }
    for (size_t j = start; j < candidates.size(); ++j) {
      if (!fits(candidates[j]))
        continue;
      chosen.push_back(candidates[j]);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(1, found.size() / 64)));
  std::vector<std::vector<std::vector<uint32_t>>> partial(threads);
  auto work = [&](unsigned id) {
    for (size_t i = id; i < found.size(); i += threads)
      partial[id].push_back(canonical_words(d, found[i]));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id)
      pool.emplace_back(work, id);
    for (auto &t : pool)
      t.join();
  }

  std::vector<std::vector<uint32_t>> codes;
  for (auto &part : partial)
    codes.insert(codes.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

  std::vector<CombinatorialType> out;
  for (auto &code : codes)
    out.push_back(type_of(d, std::move(code)));
  return out;
}

}  // namespace spinorb
