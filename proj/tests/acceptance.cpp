// One [PASS]/[FAIL] line per acceptance criterion; exit status 1 if any fails.
#include "oracles.hpp"

#include "spinorb/cli.hpp"
#include "spinorb/corpus.hpp"
#include "spinorb/io.hpp"
#include "spinorb/nullspaces.hpp"
#include "spinorb/reduction.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace spinorb;
using spinorb::testing::Rng;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string &detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " AC" << n << "  " << detail << std::endl;
  failures += !ok;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json enumerate_json(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "enumerate");
  args.insert(args.end(), {"--format", "json"});
  if (run_cli(args, out, err) != kExitOk)
    throw std::runtime_error("enumerate failed: " + err.str());
  return parse_json(out.str());
}

// k -> list of sorted edge label lists
std::map<int, std::vector<std::vector<int>>> edge_lists(const Json &doc) {
  std::map<int, std::vector<std::vector<int>>> out;
  for (const Json &t : doc["types"]) {
    std::vector<int> labels;
    for (const Json &e : t["edges"])
      labels.push_back(e["e"].get<int>());
    std::sort(labels.begin(), labels.end());
    out[t["k"].get<int>()].push_back(labels);
  }
  return out;
}

std::string join(const std::vector<int> &v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void ac1() {
  const auto start = Clock::now();
  const auto lists = edge_lists(enumerate_json({"--half-dim", "4", "--all-k"}));
  const double t = seconds_since(start);
  size_t total = 0;
  for (const auto &[k, v] : lists)
    total += v.size();
  const bool ok = total == 1 && lists.count(2) && lists.at(2).front() == std::vector<int>{0} && t < 1.0;
  report(1, ok, "d=4: " + std::to_string(total) + " type(s), edges [" +
                    (total ? join(lists.begin()->second.front()) : "") + "], " + std::to_string(t) + " s");
}

void ac2() {
  const auto lists = edge_lists(enumerate_json({"--half-dim", "5", "--all-k"}));
  size_t total = 0;
  for (const auto &[k, v] : lists)
    total += v.size();
  const bool ok = total == 1 && lists.count(2) && lists.at(2).front() == std::vector<int>{1};
  report(2, ok, "d=5: " + std::to_string(total) + " type(s), edges [" +
                    (total ? join(lists.begin()->second.front()) : "") + "]");
}

void ac3() {
  auto k2 = edge_lists(enumerate_json({"--half-dim", "6", "--k", "2"}))[2];
  auto k3 = edge_lists(enumerate_json({"--half-dim", "6", "--k", "3"}))[3];
  auto k4 = edge_lists(enumerate_json({"--half-dim", "6", "--k", "4", "--allow-reducible"}))[4];
  std::sort(k2.begin(), k2.end());
  const bool ok = k2 == std::vector<std::vector<int>>{{0}, {2}} &&
                  k3 == std::vector<std::vector<int>>{{2, 2, 2}} &&
                  k4 == std::vector<std::vector<int>>{{2, 2, 2, 2, 2, 2}};
  report(3, ok, "d=6: k=2 " + std::to_string(k2.size()) + " types, k=3 " + std::to_string(k3.size()) +
                    ", k=4 reducible " + std::to_string(k4.size()));
}

void ac4() {
  const auto start = Clock::now();
  const Json doc = enumerate_json({"--half-dim", "7", "--all-k"});
  const double t = seconds_since(start);
  std::map<int, int> counts;
  std::set<std::string> codes;
  for (const Json &ty : doc["types"]) {
    ++counts[ty["k"].get<int>()];
    codes.insert(ty["code"].get<std::string>());
  }
  std::string labels;
  int matched = 0;
  for (const auto &ref : reference_configurations()) {
    if (ref.config.half_dim != 7)
      continue;
    if (codes.count(canonical_form(ref.config).code_string())) {
      ++matched;
      labels += ref.case_label;
    }
  }
  const std::map<int, int> expected = {{2, 2}, {3, 2}, {4, 3}, {5, 1}};
  const bool ok = counts == expected && codes.size() == 8 && matched == 8 && labels == "bdcfegih" && t < 300.0;
  std::string detail = "d=7 counts";
  for (int k = 2; k <= 6; ++k)
    detail += " k=" + std::to_string(k) + ":" + std::to_string(counts.count(k) ? counts.at(k) : 0);
  report(4, ok, detail + ", cases " + labels + ", " + std::to_string(t) + " s");
}

void ac5() {
  std::ostringstream out, err;
  run_cli({"bounds", "--from", "6", "--to", "8"}, out, err);
  const std::string text = out.str();
  const bool ok = text.find("\n6\t3\t4\t") != std::string::npos && text.find("\n7\t5\t6\t") != std::string::npos &&
                  text.find("\n8\t11\t12\t") != std::string::npos;
  report(5, ok, "d=6 even<=4, d=7 odd<=5 even<=6, d=8 odd<=11 even<=12");
}

ExtForm lit(int d, std::vector<Label2d> labels, GaussianRational c = 1) { return ExtForm::monomial(d, labels, c); }

bool equal_up_to_sign(const ExtForm &a, const ExtForm &b) { return a == b || a == GaussianRational(-1) * b; }

// Scalar s with a = s * b, if one exists.
std::optional<GaussianRational> ratio(const ExtForm &a, const ExtForm &b) {
  if (a.terms().size() != b.terms().size() || b.is_zero())
    return std::nullopt;
  const GaussianRational s = a.terms().begin()->second / b.terms().begin()->second;
  return a == s * b ? std::optional(s) : std::nullopt;
}

void ac6() {
  const ExtForm omega4 = kahler_form(4);
  const ExtForm cayley_display = lit(4, {eb(1), eb(2), eb(3), eb(4)}) + lit(4, {e(1), e(2), e(3), e(4)}) +
                                 GaussianRational(mpq_class(1, 2)) * wedge(omega4, omega4);
  const ExtForm triple_display = lit(6, {eb(5), eb(6)}) + lit(6, {eb(1), eb(2)}) + lit(6, {e(3), e(4)});
  const ExtForm square_display = lit(6, {eb(1), eb(2)}) + lit(6, {eb(3), eb(4)}) + lit(6, {eb(5), eb(6)}) +
                                 lit(6, {e(1), e(2)}) + lit(6, {e(3), e(4)}) + lit(6, {e(5), e(6)});

  struct Case {
    std::string name;
    int degree;
    ExtForm display;
  };
  const std::vector<Case> cases = {
      {"8d-pair", 4, cayley_display}, {"12d-triple", 2, triple_display}, {"12d-square", 2, square_display}};
  bool ok = true;
  std::ostringstream diag;
  std::vector<ExtForm> computed;
  for (const Case &c : cases) {
    const ExtForm form = bilinear(spinor_of(reference(c.name).config), c.degree);
    computed.push_back(form);
    const bool match = equal_up_to_sign(form, c.display);
    ok = ok && match;
    diag << "      " << c.name << " B_" << c.degree << (match ? " matches" : " differs")
         << "\n        computed: " << form.to_string()
         << "\n        display:  " << c.display.to_string() << "\n";
    if (match)
      continue;
    // Flip the vacuum constituent's sign, which is a Cartan rescaling, then look for a common scalar.
    Configuration flipped = reference(c.name).config;
    flipped.coeffs.assign(flipped.size(), GaussianRational(1));
    flipped.coeffs[0] = -1;
    const ExtForm alt = bilinear(spinor_of(flipped), c.degree);
    if (auto s = ratio(form, c.display))
      diag << "        computed = " << s->to_string() << " x display\n";
    else if (auto s2 = ratio(alt, c.display))
      diag << "        with the vacuum constituent negated, computed = " << s2->to_string() << " x display\n";
    else
      diag << "        not proportional to the display under constituent sign changes\n";
  }
  const int stab_computed = testing::form_stabilizer_dim({computed[0]}, 4);
  const int stab_display = testing::form_stabilizer_dim({cayley_display}, 4);
  diag << "      form stabilizer in so(8): computed B_4 " << stab_computed << ", displayed four-form " << stab_display
       << " (Spin(7) has 21)\n";
  report(6, ok, "bilinears against the displayed forms, up to one overall sign");
  std::cout << diag.str();
}

void ac7() {
  bool ok = true;
  std::string detail;
  for (const auto &ref : reference_configurations()) {
    const int dim = stabilizer_algebra(spinor_of(ref.config)).dimension;
    ok = ok && dim >= ref.simple_part_dim;
    detail += " " + ref.name + "=" + std::to_string(dim) + (dim >= ref.simple_part_dim ? ">=" : "<") +
              std::to_string(ref.simple_part_dim);
  }
  report(7, ok, "stabilizer floors:" + detail);
}

void ac8() {
  const int square = stabilizer_algebra(spinor_of(reference("12d-square").config)).dimension;
  const int pair = stabilizer_algebra(spinor_of(reference("12d-pair-e0").config)).dimension;
  const TwelveReduction r = reduce_12d_k4(reference("12d-square").config);
  report(8, square == pair && r.proportional,
         "stabilizer square " + std::to_string(square) + " vs impurity-two " + std::to_string(pair) +
             ", B_2 = " + r.lambda.to_string() + " sum bbar_i^b_i " + (r.proportional ? "verified" : "FAILED"));
}

void ac9() {
  std::vector<std::pair<std::string, std::function<bool()>>> suites;
  suites.emplace_back("clifford relation", [] {
    Rng rng(901);
    for (int trial = 0; trial < 500; ++trial) {
      const int d = 1 + trial % 5;
      const Vector2d u = testing::random_vector(d, rng), v = testing::random_vector(d, rng);
      const Spinor psi = testing::random_spinor(d, rng, false);
      if (clifford_mul(u, clifford_mul(v, psi)) + clifford_mul(v, clifford_mul(u, psi)) != metric(u, v) * psi)
        return false;
    }
    return true;
  });
  suites.emplace_back("inner-product invariance", [] {
    Rng rng(902);
    for (int d = 1; d <= 5; ++d)
      for (int trial = 0; trial < 4; ++trial) {
        const Spinor psi = testing::random_spinor(d, rng), phi = testing::random_spinor(d, rng);
        for (const LieElement &x : lie_basis(d))
          if (!(inner(act(x, psi), phi) + inner(psi, act(x, phi))).is_zero())
            return false;
      }
    return true;
  });
  suites.emplace_back("purity at distance 2", [] {
    for (int d = 2; d <= 6; ++d)
      for (uint32_t s = 0; s < (1u << d); ++s)
        for (uint32_t t = 0; t < (1u << d); ++t)
          if (std::popcount(s ^ t) == 2 && std::popcount(s) % 2 == 0 &&
              !is_pure(Spinor(d, {{IndexSet(s), 1}, {IndexSet(t), GaussianRational(2, 1)}})))
            return false;
    return true;
  });
  suites.emplace_back("annihilator total nullity", [] {
    Rng rng(904);
    for (int trial = 0; trial < 300; ++trial)
      if (!annihilator(testing::random_spinor(1 + trial % 6, rng)).is_totally_null())
        return false;
    return true;
  });
  suites.emplace_back("Hamming vs linear algebra (d<=5)", [] {
    for (int d = 1; d <= 5; ++d)
      for (uint32_t s = 0; s < (1u << d); ++s)
        for (uint32_t t = 0; t < (1u << d); ++t) {
          const NullSubspace ms = annihilator(Spinor(d, {{IndexSet(s), 1}}));
          const NullSubspace mt = annihilator(Spinor(d, {{IndexSet(t), 1}}));
          if (intersection_dim(ms, mt) != d - std::popcount(s ^ t))
            return false;
        }
    return true;
  });
  suites.emplace_back("occupation/edge/tetra identities (1000 configurations, d<=7)", [] {
    Rng rng(906);
    for (int trial = 0; trial < 1000; ++trial) {
      const int d = 2 + trial % 6;
      const int k = 1 + static_cast<int>(rng() % std::min(1 << (d - 1), 10));
      const Configuration c = testing::random_configuration(d, k, rng);
      if (!check_identities(c).holds() || occupation_profile(c).n != testing::oracle_occupation(c))
        return false;
    }
    return true;
  });
  suites.emplace_back("canonical form class function", [] {
    Rng rng(907);
    for (int trial = 0; trial < 30; ++trial) {
      const int d = 4 + trial % 4;
      const Configuration c = testing::random_configuration(d, 2 + trial % 5, rng);
      const CombinatorialType base = canonical_form(c);
      for (int g = 0; g < 100; ++g)
        if (!(canonical_form(testing::random_group_image(c, rng)) == base))
          return false;
    }
    return true;
  });

  bool ok = true;
  std::ostringstream detail;
  for (const auto &[name, suite] : suites) {
    const auto start = Clock::now();
    const bool passed = suite();
    const double t = seconds_since(start);
    ok = ok && passed && t < 60.0;
    detail << "\n      " << name << ": " << (passed ? "ok" : "FAILED") << " in " << t << " s";
  }
  report(9, ok, "property suites (d<=7)" + detail.str());
}

void ac10() {
  bool ok = true;
  std::string detail;
  for (const auto &ref : reference_configurations()) {
    if (ref.config.half_dim != 7)
      continue;
    const bool eq = cartan_equalizable(ref.config);
    ok = ok && eq;
    detail += " " + ref.case_label + (eq ? "=yes" : "=no");
  }
  report(10, ok, "Cartan rescaling on the 14D configurations:" + detail);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10};
  for (size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception &e) {
      report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
    }
  }
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
