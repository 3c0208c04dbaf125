#pragma once

#include "spinorb/configuration.hpp"

#include <string>
#include <vector>

namespace spinorb {

/// A named representative configuration with the simple part of its stabilizer.
struct ReferenceConfiguration {
  std::string name;
  Configuration config;
  std::string case_label;  ///< letter in the standard 14D orbit list, empty below 14D
  std::string simple_part;
  int simple_part_dim = 0;
};

/// Representatives of every impure orbit type in dimensions 8 through 14 (all coefficients 1).
const std::vector<ReferenceConfiguration> &reference_configurations();
const ReferenceConfiguration &reference(const std::string &name);

}  // namespace spinorb
