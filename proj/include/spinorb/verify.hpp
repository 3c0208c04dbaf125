#pragma once

#include "spinorb/io.hpp"

#include <map>
#include <string>
#include <vector>

namespace spinorb {

struct TypeReport {
  int k = 0;
  std::string code;
  std::vector<int> edges;
  bool reducible = false;
  std::string reference;   ///< matching reference configuration, if any
  std::string case_label;
  bool cartan_equalizable = false;
  int stabilizer_dim = -1;            ///< on the canonical representative
  int reference_stabilizer_dim = -1;  ///< on the reference configuration
  int floor = 0;
  std::string floor_group;
  int bilinear_degree = -1;
  int bilinear_terms = -1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int dim = 0;
  std::map<int, int> counts;
  std::map<int, int> reducible_counts;
  std::vector<TypeReport> types;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string to_text() const;
};

/// Runs enumeration, stabilizers, Cartan checks and bilinears for 2d = dim and compares
/// them with the expectation document. Throws std::invalid_argument for unsupported dims.
VerifyReport run_verify(int dim, const Json &expectations);

/// Recomputes every value marked "derived" in the document, leaving published values untouched.
Json regenerate_expectations(const Json &expectations);

Json load_expectations(const std::string &path);

}  // namespace spinorb
