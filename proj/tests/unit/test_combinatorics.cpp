#include "oracles.hpp"

#include "spinorb/spin_lie.hpp"

#include "spinorb/corpus.hpp"
#include "spinorb/nullspaces.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>

using namespace spinorb;
using spinorb::testing::Rng;

namespace {

Configuration all_even_words(int d) {
  Configuration c;
  c.half_dim = d;
  for (uint32_t s = 0; s < (1u << d); ++s)
    if (std::popcount(s) % 2 == 0)
      c.words.emplace_back(s);
  return c;
}

long binom(int n, int r) {
  long out = 1;
  for (int i = 0; i < r; ++i)
    out = out * (n - i) / (i + 1);
  return out;
}

// Independent enumeration: all k-subsets containing the vacuum, scanned in the given word order.
std::set<std::vector<uint32_t>> brute_force_types(int d, int k, bool irreducible, bool reverse) {
  std::vector<uint32_t> pool;
  for (uint32_t s = 1; s < (1u << d); ++s)
    if (std::popcount(s) % 2 == 0)
      pool.push_back(s);
  if (reverse)
    std::reverse(pool.begin(), pool.end());
  std::set<std::vector<uint32_t>> out;
  std::vector<int> pick(k - 1);
  std::vector<bool> mask(pool.size(), false);
  std::fill(mask.begin(), mask.begin() + (k - 1), true);
  do {
    Configuration c;
    c.half_dim = d;
    c.words.emplace_back(0u);
    for (size_t i = 0; i < pool.size(); ++i)
      if (mask[i])
        c.words.emplace_back(pool[i]);
    bool ok = true;
    for (const auto &[pair, e] : edge_dims(c))
      ok = ok && e <= d - 4;
    if (ok && irreducible)
      ok = is_irreducible(c);
    if (ok)
      out.insert(canonical_form(c).code);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace

TEST_CASE("occupation profiles") {
  const Configuration pair = reference("8d-pair").config;
  CHECK(occupation_profile(pair).n == std::vector<int>{0, 8, 0});
  const OccupationProfile full8 = occupation_profile(all_even_words(4));
  CHECK(full8.n[4] == 8);
  CHECK(occupation_profile(all_even_words(3)).n[2] == 6);
}

TEST_CASE("edge labels") {
  CHECK(edge_dims(reference("8d-pair").config).at({0, 1}) == 0);
  for (const auto &[pair, e] : edge_dims(reference("12d-triple").config))
    CHECK(e == 2);
  Configuration same;
  same.half_dim = 5;
  same.words = {IndexSet::of({1, 2}), IndexSet::of({1, 2})};
  CHECK_THROWS_AS(edge_dims(same), std::invalid_argument);
  const NullSubspace m = annihilator(Spinor(5, {{IndexSet::of({1, 2}), 1}}));
  CHECK(intersection_dim(m, m) == 5);
}

TEST_CASE("tetrahedron labels") {
  const TetraLabels six = tetra_dims(all_even_words(3));
  REQUIRE(six.size() == 1);
  CHECK(six.begin()->second == 0);
  Configuration sharing;
  sharing.half_dim = 4;
  sharing.words = {IndexSet(), IndexSet::of({2, 3}), IndexSet::of({2, 4}), IndexSet::of({3, 4})};
  CHECK(tetra_dims(sharing).begin()->second == 1);
}

TEST_CASE("identities on the full eight-dimensional set") {
  const IdentityReport r = check_identities(all_even_words(4));
  CHECK(r.holds());
  CHECK(r.edge_lhs == 48);
  CHECK(r.edge_rhs == 48);
  int with_one = 0;
  for (const auto &[quad, t] : tetra_dims(all_even_words(4)))
    with_one += t == 1;
  CHECK(with_one == 8);
}

TEST_CASE("occupation and intersection identities on 1000 random configurations") {
  Rng rng(51);
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + trial % 6;
    const int max_k = std::min(1 << (d - 1), 8);
    const int k = 1 + static_cast<int>(rng() % max_k);
    const Configuration c = testing::random_configuration(d, k, rng);
    const std::vector<int> n = testing::oracle_occupation(c);
    CHECK(occupation_profile(c).n == n);
    const IdentityReport r = check_identities(c);
    CHECK(r.holds());
    long edges = 0, tetras = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        edges += testing::oracle_shared_boxes(c.words[a].bits(), c.words[b].bits(), d);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (int x = b + 1; x < k; ++x)
          for (int y = x + 1; y < k; ++y) {
            const uint32_t agree = ~((c.words[a].bits() ^ c.words[b].bits()) | (c.words[a].bits() ^ c.words[x].bits()) |
                                     (c.words[a].bits() ^ c.words[y].bits()));
            tetras += std::popcount(agree & ((1u << d) - 1u));
          }
    long edge_lhs = 0, tetra_lhs = 0;
    for (int j = 0; j <= k; ++j) {
      edge_lhs += binom(j, 2) * n[j];
      tetra_lhs += binom(j, 4) * n[j];
    }
    CHECK(edge_lhs == edges);
    CHECK(tetra_lhs == tetras);
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(60));
}

TEST_CASE("Hamming labels match annihilator intersections") {
  Rng rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 4 + trial % 2;
    const Configuration c = testing::random_configuration(d, 4, rng);
    std::vector<NullSubspace> m;
    for (IndexSet w : c.words)
      m.push_back(annihilator(Spinor(d, {{w, 1}})));
    for (const auto &[pair, e] : edge_dims(c))
      CHECK(intersection_dim(m[pair.first], m[pair.second]) == e);
    for (const auto &[quad, t] : tetra_dims(c))
      CHECK(intersect(intersect(m[quad[0]], m[quad[1]]), intersect(m[quad[2]], m[quad[3]])).dim() == t);
  }
}

TEST_CASE("four words sharing a box give a tetrahedron with t >= 1") {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const Configuration c = testing::random_configuration(7, 5, rng);
    if (occupation_profile(c).n[4] == 0)
      continue;
    int top = 0;
    for (const auto &[quad, t] : tetra_dims(c))
      top = std::max(top, t);
    CHECK(top >= 1);
  }
}

TEST_CASE("irreducibility") {
  CHECK_FALSE(is_irreducible(reference("12d-square").config));
  CHECK(is_irreducible(reference("14d-h").config));
  CHECK_FALSE(is_irreducible(Configuration::make(5, {{}, {1, 2}})));
  CHECK(is_irreducible(reference("8d-pair").config));
}

TEST_CASE("feasible impurity bounds") {
  const KBounds d7 = feasible_k_bounds(7);
  CHECK(d7.max_odd == 5);
  CHECK(d7.max_even == 6);
  const KBounds d8 = feasible_k_bounds(8);
  CHECK(d8.max_odd == 11);
  CHECK(d8.max_even == 12);
  CHECK(feasible_k_bounds(4).max_even == 2);
  CHECK(feasible_k_bounds(5).max_even == 2);
  CHECK(feasible_k_bounds(4).max_odd == 1);
  CHECK(feasible_k_bounds(6).max_even == 4);
  CHECK(feasible_k_bounds(6).max_odd == 3);
  CHECK(feasible_k_bounds(9).max_odd == 53);
  CHECK(feasible_k_bounds(9).max_even == 54);
  CHECK_FALSE(feasible_k_bounds(10).max_odd.has_value());
  CHECK(d7.rules.size() == 4);
}

TEST_CASE("canonical form is a class function") {
  Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 3 + trial % 5;
    const Configuration c = testing::random_configuration(d, std::min(2 + trial % 4, 1 << (d - 1)), rng);
    const CombinatorialType base = canonical_form(c);
    CHECK(base.code.front() == 0u);
    for (int g = 0; g < 100; ++g)
      CHECK(canonical_form(testing::random_group_image(c, rng)) == base);
    Configuration moved = c;
    for (IndexSet &w : moved.words)
      w = IndexSet(w.bits() ^ c.words.back().bits());
    CHECK(canonical_form(moved) == base);
    CHECK(canonical_form(moved).edge_multiset() == base.edge_multiset());
  }
  CHECK_FALSE(canonical_form(reference("12d-pair-e2").config) == canonical_form(reference("12d-pair-e0").config));
}

TEST_CASE("type codes") {
  const CombinatorialType t = canonical_form(reference("14d-c").config);
  CHECK(t.code_string() == "7:0,f,33");
  CHECK(t.k() == 3);
  CHECK(canonical_form(t.representative()) == t);
}

TEST_CASE("enumeration counts in small dimensions") {
  CHECK(enumerate_types(4, 2).size() == 1);
  CHECK(enumerate_types(4, 2).front().edge_multiset() == std::vector<int>{0});
  CHECK(enumerate_types(6, 3).size() == 1);
  CHECK(enumerate_types(6, 4, {.require_irreducible = false}).size() == 1);
  CHECK(enumerate_types(7, 6).empty());
  CHECK(enumerate_types(4, 3).empty());
}

TEST_CASE("enumeration agrees with an exhaustive scan in either order") {
  for (int d = 4; d <= 6; ++d)
    for (int k = 2; k <= 4; ++k)
      for (bool irreducible : {true, false}) {
        std::set<std::vector<uint32_t>> found;
        EnumerationOptions options;
        options.require_irreducible = irreducible;
        for (const CombinatorialType &t : enumerate_types(d, k, options))
          found.insert(t.code);
        CHECK(found == brute_force_types(d, k, irreducible, false));
        CHECK(found == brute_force_types(d, k, irreducible, true));
      }
}

TEST_CASE("enumeration is deterministic across thread counts") {
  EnumerationOptions one, many;
  one.threads = 1;
  many.threads = 8;
  for (int k = 2; k <= 5; ++k)
    CHECK(enumerate_types(7, k, one) == enumerate_types(7, k, many));
}

TEST_CASE("every enumerated type is irreducible and Cartan equalizable") {
  for (int d = 4; d <= 7; ++d)
    for (int k = 2; k <= 6; ++k)
      for (const CombinatorialType &t : enumerate_types(d, k)) {
        CHECK(is_irreducible(t.representative()));
        CHECK(cartan_equalizable(t.representative()));
      }
}

TEST_CASE("node budget") {
  EnumerationOptions tight;
  tight.node_budget = 10;
  CHECK_THROWS_AS(enumerate_types(7, 4, tight), BudgetExceeded);
}
