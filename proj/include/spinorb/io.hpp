#pragma once

#include "spinorb/combinatorics.hpp"
#include "spinorb/configuration.hpp"
#include "spinorb/forms.hpp"
#include "spinorb/spin_lie.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace spinorb {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// [re_num, re_den, im_num, im_den] as decimal strings.
Json coeff_to_json(const GaussianRational &c);
GaussianRational coeff_from_json(const Json &j);

Json spinor_to_json(const Spinor &psi);
Spinor spinor_from_json(const Json &j);

Json form_to_json(const ExtForm &form);
ExtForm form_from_json(const Json &j);

Json configuration_to_json(const Configuration &c);
Configuration configuration_from_json(const Json &j);

Json lie_to_json(const LieElement &x);

Json type_to_json(const CombinatorialType &t);
/// Graphviz graph: vertices A, B, ...; edges labelled with their intersection dimension.
std::string type_to_dot(const CombinatorialType &t, const std::string &name = "type");
/// Vertex name for index 0, 1, ...: A..Z, then A1, B1, ...
std::string vertex_name(int index);

/// Parses text, throwing ParseError with the parser's diagnostic.
Json parse_json(const std::string &text);
/// Accepts a spinor document, or a configuration document converted with spinor_of.
Spinor spinor_from_document(const Json &j);

}  // namespace spinorb
