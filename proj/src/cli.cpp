#include "spinorb/cli.hpp"

#include "spinorb/combinatorics.hpp"
#include "spinorb/io.hpp"
#include "spinorb/nullspaces.hpp"
#include "spinorb/spin_lie.hpp"
#include "spinorb/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef SPINORB_DEFAULT_FIXTURES
#define SPINORB_DEFAULT_FIXTURES "data/expectations.json"
#endif

namespace spinorb {

namespace {

std::string read_input(const std::string &path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      throw ParseError("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::string bound_text(const std::optional<int> &b) {
  if (!b)
    return "inf";
  return *b == 0 ? "-" : std::to_string(*b);
}

void print_table(std::ostream &out, int d, int k, const std::vector<CombinatorialType> &types) {
  out << "d=" << d << " k=" << k << ": " << types.size() << " type" << (types.size() == 1 ? "" : "s") << "\n";
  for (const auto &t : types) {
    out << "  " << t.code_string() << "  edges";
    for (const auto &[pair, e] : t.edges)
      out << " " << vertex_name(pair.first) << vertex_name(pair.second) << "=" << e;
    int max_t = -1;
    for (const auto &[quad, v] : t.tetras)
      max_t = std::max(max_t, v);
    if (max_t >= 0)
      out << "  max t=" << max_t;
    out << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Combinatorial types and invariants of semi-spinors of Spin(2d)", "spinorb"};
  app.require_subcommand(1);

  int half_dim = 0, k = 0;
  bool all_k = false, allow_reducible = false;
  std::string format = "table";
  auto *enumerate = app.add_subcommand("enumerate", "List combinatorial types of impure spinors");
  enumerate->add_option("--half-dim", half_dim, "d, half the dimension")->required()->check(CLI::Range(2, 10));
  auto *k_opt = enumerate->add_option("--k", k, "number of pure constituents")->check(CLI::PositiveNumber);
  auto *all_opt = enumerate->add_flag("--all-k", all_k, "every k from 2 up to the feasibility bound");
  k_opt->excludes(all_opt);
  enumerate->add_flag("--allow-reducible", allow_reducible, "drop the tetrahedron rule");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"table", "json", "dot"}));

  int dim = 0;
  std::string fixtures = SPINORB_DEFAULT_FIXTURES;
  bool regen = false;
  auto *verify = app.add_subcommand("verify", "Check the classification in one dimension against fixtures");
  verify->add_option("--dim", dim, "2d")->required()->check(CLI::IsMember({8, 10, 12, 14}));
  verify->add_option("--fixtures", fixtures, "expectation file");
  verify->add_flag("--regen-fixtures", regen, "recompute derived values in the expectation file first");

  std::string input;
  int degree = 0;
  std::string form_format = "text";
  auto *bil = app.add_subcommand("bilinear", "Degree-k form B_k(psi, psi)");
  bil->add_option("--input", input, "spinor or configuration JSON ('-' for stdin)")->required();
  bil->add_option("--k", degree, "form degree")->required();
  bil->add_option("--format", form_format)->check(CLI::IsMember({"text", "json"}));

  bool with_basis = false;
  auto *stab = app.add_subcommand("stabilizer", "Dimension of the stabilizer subalgebra");
  stab->add_option("--input", input)->required();
  stab->add_flag("--basis", with_basis, "also print a basis as (A, beta, B) JSON");

  auto *purity = app.add_subcommand("purity", "Purity and nullity of a spinor");
  purity->add_option("--input", input)->required();
  auto *null_cmd = app.add_subcommand("nullity", "Dimension of the annihilator");
  null_cmd->add_option("--input", input)->required();

  int from = 2, to = 9;
  auto *bounds = app.add_subcommand("bounds", "Feasibility bounds on k for a range of d");
  bounds->add_option("--from", from)->check(CLI::Range(2, 16));
  bounds->add_option("--to", to)->check(CLI::Range(2, 16));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (enumerate->parsed()) {
      if (!all_k && k == 0) {
        err << "enumerate: one of --k or --all-k is required\n";
        return kExitInputError;
      }
      std::vector<int> ks;
      if (all_k) {
        const KBounds b = feasible_k_bounds(half_dim);
        const int top = std::max(b.max_odd.value_or(0), b.max_even.value_or(0));
        if (!b.max_odd || !b.max_even) {
          err << "enumerate: k is unbounded for d=" << half_dim << "; pass --k\n";
          return kExitInputError;
        }
        for (int kk = 2; kk <= top; ++kk)
          ks.push_back(kk);
      } else {
        ks.push_back(k);
      }
      EnumerationOptions options;
      options.require_irreducible = !allow_reducible;
      Json doc = {{"d", half_dim}, {"allow_reducible", allow_reducible}, {"types", Json::array()}};
      for (int kk : ks) {
        const auto types = enumerate_types(half_dim, kk, options);
        if (format == "table") {
          print_table(out, half_dim, kk, types);
        } else if (format == "dot") {
          for (size_t n = 0; n < types.size(); ++n)
            out << type_to_dot(types[n], "d" + std::to_string(half_dim) + "_k" + std::to_string(kk) + "_" +
                                             std::to_string(n + 1));
        } else {
          for (const auto &t : types)
            doc["types"].push_back(type_to_json(t));
        }
      }
      if (format == "json")
        out << doc.dump(2) << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      Json expectations = load_expectations(fixtures);
      if (regen) {
        expectations = regenerate_expectations(expectations);
        std::ofstream file(fixtures);
        if (!file)
          throw ParseError("cannot write " + fixtures);
        file << expectations.dump(2) << "\n";
      }
      const VerifyReport report = run_verify(dim, expectations);
      out << report.to_text();
      return report.ok() ? kExitOk : kExitMismatch;
    }

    if (bil->parsed()) {
      const Spinor psi = spinor_from_document(parse_json(read_input(input)));
      const ExtForm form = bilinear(psi, degree);
      if (form_format == "json")
        out << form_to_json(form).dump(2) << "\n";
      else
        out << form.to_string() << "\n";
      return kExitOk;
    }

    if (stab->parsed()) {
      const Spinor psi = spinor_from_document(parse_json(read_input(input)));
      const StabilizerAlgebra s = stabilizer_algebra(psi);
      out << "dimension " << s.dimension << "\n";
      if (with_basis) {
        Json basis = Json::array();
        for (const auto &x : s.basis)
          basis.push_back(lie_to_json(x));
        out << basis.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (purity->parsed() || null_cmd->parsed()) {
      const Spinor psi = spinor_from_document(parse_json(read_input(input)));
      const int n = nullity(psi);
      if (purity->parsed())
        out << "pure " << (n == psi.half_dim() ? "true" : "false") << "\nnullity " << n << "\n";
      else
        out << n << "\n";
      return kExitOk;
    }

    if (bounds->parsed()) {
      if (from > to) {
        err << "bounds: --from exceeds --to\n";
        return kExitInputError;
      }
      out << "d\todd\teven\tedge-odd\tedge-even\ttetra-odd\ttetra-even\n";
      for (int d = from; d <= to; ++d) {
        const KBounds b = feasible_k_bounds(d);
        out << d << "\t" << bound_text(b.max_odd) << "\t" << bound_text(b.max_even);
        for (const char *rule : {"edge", "tetra"})
          for (bool odd : {true, false}) {
            auto it = std::find_if(b.rules.begin(), b.rules.end(),
                                   [&](const RuleBound &r) { return r.rule == rule && r.odd == odd; });
            out << "\t" << (it == b.rules.end() ? std::string("n/a") : bound_text(it->max_k));
          }
        out << "\n";
      }
      return kExitOk;
    }
  } catch (const BudgetExceeded &e) {
    err << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception &e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace spinorb
