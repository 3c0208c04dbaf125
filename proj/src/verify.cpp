#include "spinorb/verify.hpp"

#include "spinorb/corpus.hpp"
#include "spinorb/nullspaces.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace spinorb {

namespace {

std::string join(const std::vector<int> &v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

const Json *field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null())
    return nullptr;
  return &j.at(key);
}

// The "value" of an annotated entry, or nullptr when absent or not yet generated.
const Json *value_of(const Json &j, const char *key) {
  const Json *f = field(j, key);
  if (!f)
    return nullptr;
  return field(*f, "value");
}

std::vector<int> sorted_edges(const Json &entry) {
  const Json *v = value_of(entry, "edges");
  if (!v)
    throw ParseError("expectation type without edges");
  std::vector<int> out = v->get<std::vector<int>>();
  std::sort(out.begin(), out.end());
  return out;
}

int bilinear_term_count(const Configuration &c, int degree) {
  return static_cast<int>(bilinear(spinor_of(c), degree).terms().size());
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "dimension " << dim << " (d=" << dim / 2 << ")\n";
  for (const auto &[k, n] : counts)
    os << "  k=" << k << ": " << n << " irreducible type" << (n == 1 ? "" : "s") << "\n";
  for (const auto &[k, n] : reducible_counts)
    os << "  k=" << k << " (reducible allowed): " << n << " type" << (n == 1 ? "" : "s") << "\n";
  for (const TypeReport &t : types) {
    os << "  type k=" << t.k << " edges [" << join(t.edges) << "]" << (t.reducible ? " reducible" : "");
    if (!t.reference.empty())
      os << " ~ " << t.reference;
    if (!t.case_label.empty())
      os << " (case " << t.case_label << ")";
    os << "\n    code " << t.code << ", cartan " << (t.cartan_equalizable ? "yes" : "no") << ", stabilizer "
       << t.stabilizer_dim;
    if (t.reference_stabilizer_dim >= 0)
      os << " (reference " << t.reference_stabilizer_dim << ")";
    if (t.floor > 0)
      os << ", floor " << t.floor << " " << t.floor_group;
    if (t.bilinear_degree >= 0)
      os << ", B_" << t.bilinear_degree << " terms " << t.bilinear_terms;
    os << "\n";
  }
  for (const CheckResult &c : checks)
    os << "  [" << (c.passed ? "ok" : "MISMATCH") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
       << "\n";
  os << (ok() ? "all checks passed\n" : "verification FAILED\n");
  return os.str();
}

VerifyReport run_verify(int dim, const Json &expectations) {
  if (dim != 8 && dim != 10 && dim != 12 && dim != 14)
    throw std::invalid_argument("verify: dimension must be 8, 10, 12 or 14");
  const std::string key = std::to_string(dim);
  if (!expectations.contains(key))
    throw ParseError("expectations have no entry for dimension " + key);
  const Json &entry = expectations.at(key);
  const int d = dim / 2;

  VerifyReport report;
  report.dim = dim;
  auto check = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  std::vector<std::pair<CombinatorialType, bool>> found;
  auto run_counts = [&](const char *field_name, bool reducible, std::map<int, int> &counts) {
    const Json *table = field(entry, field_name);
    if (!table)
      return;
    for (const auto &[kstr, count] : table->items()) {
      const int k = std::stoi(kstr);
      EnumerationOptions options;
      options.require_irreducible = !reducible;
      const auto types = enumerate_types(d, k, options);
      counts[k] = static_cast<int>(types.size());
      const int expected = count.at("value").get<int>();
      check(std::string(reducible ? "reducible " : "") + "type count k=" + kstr, counts[k] == expected,
            std::to_string(counts[k]) + " found, " + std::to_string(expected) + " expected (" +
                count.value("source", std::string("?")) + ")");
      for (const auto &t : types)
        found.emplace_back(t, reducible);
    }
  };
  run_counts("type_counts", false, report.counts);
  run_counts("reducible_counts", true, report.reducible_counts);

  const Json empty = Json::array();
  const Json &fixtures = entry.contains("types") ? entry.at("types") : empty;
  std::vector<int> matched(fixtures.size(), 0);
  std::map<std::string, int> reference_dims;

  for (const auto &[type, reducible] : found) {
    TypeReport r;
    r.k = type.k();
    r.code = type.code_string();
    r.edges = type.edge_multiset();
    r.reducible = reducible;
    const Configuration canonical = type.representative();
    r.cartan_equalizable = cartan_equalizable(canonical);
    r.stabilizer_dim = stabilizer_algebra(spinor_of(canonical)).dimension;
    const std::string label = "k=" + std::to_string(r.k) + " [" + join(r.edges) + "]";

    const Json *fixture = nullptr;
    for (size_t i = 0; i < fixtures.size(); ++i) {
      const Json &f = fixtures[i];
      if (f.at("k").get<int>() == r.k && f.value("reducible", false) == reducible && sorted_edges(f) == r.edges) {
        fixture = &f;
        ++matched[i];
      }
    }
    if (!fixture) {
      check("type " + label + " listed in expectations", false, "no matching entry");
      report.types.push_back(r);
      continue;
    }

    if (const Json *ref = field(*fixture, "reference")) {
      const ReferenceConfiguration &rc = reference(ref->get<std::string>());
      r.reference = rc.name;
      r.case_label = rc.case_label;
      check("type " + label + " matches " + rc.name, canonical_form(rc.config) == type);
      r.reference_stabilizer_dim = stabilizer_algebra(spinor_of(rc.config)).dimension;
      reference_dims[rc.name] = r.reference_stabilizer_dim;
      check("stabilizer " + rc.name + " canonical vs reference", r.reference_stabilizer_dim == r.stabilizer_dim,
            std::to_string(r.stabilizer_dim) + " vs " + std::to_string(r.reference_stabilizer_dim));
      if (const Json *bt = field(*fixture, "bilinear_terms")) {
        r.bilinear_degree = bt->at("degree").get<int>();
        r.bilinear_terms = bilinear_term_count(rc.config, r.bilinear_degree);
        if (const Json *v = field(*bt, "value"))
          check("B_" + std::to_string(r.bilinear_degree) + " term count " + rc.name,
                r.bilinear_terms == v->get<int>(),
                std::to_string(r.bilinear_terms) + " vs " + std::to_string(v->get<int>()) + " (" +
                    bt->value("source", std::string("?")) + ")");
      }
    }
    if (const Json *v = value_of(*fixture, "cartan_equalizable"))
      check("cartan " + label, r.cartan_equalizable == v->get<bool>());
    if (const Json *v = value_of(*fixture, "stabilizer_dim"))
      check("stabilizer dim " + label, r.stabilizer_dim == v->get<int>(),
            std::to_string(r.stabilizer_dim) + " vs fixture " + std::to_string(v->get<int>()));
    else
      check("stabilizer dim " + label, false, "fixture not generated; run verify --regen-fixtures");
    if (const Json *f = field(*fixture, "stabilizer_floor")) {
      r.floor = f->at("value").get<int>();
      r.floor_group = f->value("group", std::string());
      check("stabilizer floor " + label, r.stabilizer_dim >= r.floor,
            std::to_string(r.stabilizer_dim) + " >= " + std::to_string(r.floor) + " " + r.floor_group);
    }
    report.types.push_back(r);
  }

  for (size_t i = 0; i < fixtures.size(); ++i)
    check("expected type k=" + std::to_string(fixtures[i].at("k").get<int>()) + " [" +
              join(sorted_edges(fixtures[i])) + "] found once",
          matched[i] == 1, std::to_string(matched[i]) + " matches");

  if (const Json *orbits = field(entry, "same_orbit"))
    for (const Json &pair : *orbits) {
      const std::string a = pair.at("a").get<std::string>(), b = pair.at("b").get<std::string>();
      const int da = reference_dims.count(a) ? reference_dims[a]
                                             : stabilizer_algebra(spinor_of(reference(a).config)).dimension;
      const int db = reference_dims.count(b) ? reference_dims[b]
                                             : stabilizer_algebra(spinor_of(reference(b).config)).dimension;
      check("equal stabilizer dims " + a + " / " + b, da == db, std::to_string(da) + " vs " + std::to_string(db));
    }

  std::sort(report.types.begin(), report.types.end(), [](const TypeReport &x, const TypeReport &y) {
    return std::tie(x.reducible, x.k, x.code) < std::tie(y.reducible, y.k, y.code);
  });
  return report;
}

Json regenerate_expectations(const Json &expectations) {
  Json out = expectations;
  for (auto &[dim, entry] : out.items()) {
    if (!entry.is_object() || !entry.contains("types"))
      continue;
    for (Json &t : entry.at("types")) {
      if (!t.contains("reference"))
        continue;
      const ReferenceConfiguration &rc = reference(t.at("reference").get<std::string>());
      auto derived = [&](const char *key) {
        return t.contains(key) && t.at(key).value("source", std::string()) == "derived";
      };
      if (derived("stabilizer_dim"))
        t["stabilizer_dim"]["value"] = stabilizer_algebra(spinor_of(rc.config)).dimension;
      if (derived("cartan_equalizable"))
        t["cartan_equalizable"]["value"] = cartan_equalizable(rc.config);
      if (derived("edges")) {
        std::vector<int> edges = canonical_form(rc.config).edge_multiset();
        t["edges"]["value"] = edges;
      }
      if (derived("bilinear_terms"))
        t["bilinear_terms"]["value"] = bilinear_term_count(rc.config, t["bilinear_terms"].at("degree").get<int>());
    }
  }
  return out;
}

Json load_expectations(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open expectations file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace spinorb
