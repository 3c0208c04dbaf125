#include "spinorb/corpus.hpp"

#include <stdexcept>

namespace spinorb {

const std::vector<ReferenceConfiguration> &reference_configurations() {
  static const std::vector<ReferenceConfiguration> all = [] {
    auto entry = [](std::string name, int d, std::vector<std::vector<int>> words, std::string label,
                    std::string group, int dim) {
      return ReferenceConfiguration{std::move(name), Configuration::make(d, words), std::move(label),
                                    std::move(group), dim};
    };
    return std::vector<ReferenceConfiguration>{
        entry("8d-pair", 4, {{}, {1, 2, 3, 4}}, "", "Spin(7)", 21),
        entry("10d-pair", 5, {{}, {1, 2, 3, 4}}, "", "Spin(7)", 21),
        entry("12d-pair-e2", 6, {{}, {1, 2, 3, 4}}, "", "Spin(7)xSL(2)", 24),
        entry("12d-pair-e0", 6, {{}, {1, 2, 3, 4, 5, 6}}, "", "SL(6)", 35),
        entry("12d-triple", 6, {{}, {1, 2, 3, 4}, {3, 4, 5, 6}}, "", "Sp(6)", 21),
        entry("12d-square", 6, {{}, {1, 2, 3, 4}, {3, 4, 5, 6}, {1, 2, 5, 6}}, "", "SL(6)", 35),
        entry("14d-b", 7, {{}, {1, 2, 3, 4}}, "b", "Spin(7)xSL(3)", 29),
        entry("14d-d", 7, {{}, {1, 2, 3, 4, 5, 6}}, "d", "SL(6)", 35),
        entry("14d-c", 7, {{}, {1, 2, 3, 4}, {3, 4, 5, 6}}, "c", "Sp(6)", 21),
        entry("14d-f", 7, {{}, {1, 2, 3, 4}, {1, 2, 3, 5, 6, 7}}, "f", "SL(3)xSL(3)", 16),
        entry("14d-e", 7, {{}, {1, 2, 3, 4}, {1, 3, 6, 7}, {2, 3, 5, 6}}, "e", "SL(4)", 15),
        entry("14d-g", 7, {{}, {1, 2, 3, 7}, {3, 4, 5, 7}, {1, 2, 3, 4, 5, 6}}, "g", "SL(2)xSp(4)", 13),
        entry("14d-i", 7, {{}, {1, 2, 3, 4}, {4, 5, 6, 7}, {1, 2, 3, 5, 6, 7}}, "i", "G2xG2", 28),
        entry("14d-h", 7, {{}, {1, 2, 4, 7}, {1, 3, 4, 6}, {2, 3, 4, 5}, {1, 2, 3, 5, 6, 7}}, "h", "G2", 14),
    };
  }();
  return all;
}

const ReferenceConfiguration &reference(const std::string &name) {
  for (const auto &r : reference_configurations())
    if (r.name == name)
      return r;
  throw std::out_of_range("no reference configuration named '" + name + "'");
}

}  // namespace spinorb
