#include "spinorb/io.hpp"

#include <sstream>

namespace spinorb {

namespace {

int int_field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  const Json &v = j.at(key);
  if (v.is_number_integer())
    return v.get<int>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    size_t pos = 0;
    try {
      const int out = std::stoi(s, &pos);
      if (pos == s.size())
        return out;
    } catch (const std::exception &) {
    }
  }
  throw ParseError(std::string("field '") + key + "' is not an integer");
}

const Json &array_field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw ParseError(std::string("missing array field '") + key + "'");
  return j.at(key);
}

std::vector<int> index_list(const Json &j) {
  if (!j.is_array())
    throw ParseError("index list must be an array");
  std::vector<int> out;
  for (const Json &v : j) {
    if (v.is_number_integer())
      out.push_back(v.get<int>());
    else if (v.is_string())
      out.push_back(int_field(Json{{"i", v}}, "i"));
    else
      throw ParseError("index must be an integer");
  }
  return out;
}

}  // namespace

Json coeff_to_json(const GaussianRational &c) {
  const auto parts = c.to_strings();
  return Json::array({parts[0], parts[1], parts[2], parts[3]});
}

GaussianRational coeff_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("coefficient must be [re_num, re_den, im_num, im_den]");
  std::array<std::string, 4> parts;
  for (size_t k = 0; k < 4; ++k) {
    if (j[k].is_string())
      parts[k] = j[k].get<std::string>();
    else if (j[k].is_number_integer())
      parts[k] = std::to_string(j[k].get<long long>());
    else
      throw ParseError("coefficient entries must be decimal strings");
  }
  try {
    return GaussianRational::from_strings(parts);
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

Json spinor_to_json(const Spinor &psi) {
  Json terms = Json::array();
  for (const auto &[s, c] : psi.terms())
    terms.push_back({{"indices", s.indices()}, {"coeff", coeff_to_json(c)}});
  return {{"d", psi.half_dim()}, {"terms", terms}};
}

Spinor spinor_from_json(const Json &j) {
  const int d = int_field(j, "d");
  try {
    Spinor out(d);
    for (const Json &t : array_field(j, "terms")) {
      const IndexSet s = IndexSet::of(index_list(array_field(t, "indices")));
      if (s.bits() & ~out.top().bits())
        throw ParseError("term {" + s.to_string() + "} exceeds d=" + std::to_string(d));
      if (!t.contains("coeff"))
        throw ParseError("term without 'coeff'");
      out.add(s, coeff_from_json(t.at("coeff")));
    }
    return out;
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

Json form_to_json(const ExtForm &form) {
  Json terms = Json::array();
  for (const auto &[m, c] : form.terms()) {
    Json labels = Json::array();
    for (const Label2d &l : form.labels(m))
      labels.push_back(l.to_string());
    terms.push_back({{"labels", labels}, {"coeff", coeff_to_json(c)}});
  }
  return {{"dim2d", form.dim2d()}, {"terms", terms}};
}

ExtForm form_from_json(const Json &j) {
  const int dim = int_field(j, "dim2d");
  if (dim % 2 || dim < 2)
    throw ParseError("dim2d must be a positive even integer");
  try {
    ExtForm out(dim / 2);
    for (const Json &t : array_field(j, "terms")) {
      std::vector<Label2d> labels;
      for (const Json &l : array_field(t, "labels")) {
        if (!l.is_string())
          throw ParseError("labels must be strings");
        labels.push_back(Label2d::parse(l.get<std::string>()));
      }
      if (!t.contains("coeff"))
        throw ParseError("term without 'coeff'");
      out += ExtForm::monomial(dim / 2, labels, coeff_from_json(t.at("coeff")));
    }
    return out;
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

Json configuration_to_json(const Configuration &c) {
  Json words = Json::array();
  for (IndexSet w : c.words)
    words.push_back(w.indices());
  Json out = {{"d", c.half_dim}, {"words", words}};
  if (!c.coeffs.empty()) {
    Json coeffs = Json::array();
    for (const auto &x : c.coeffs)
      coeffs.push_back(coeff_to_json(x));
    out["coeffs"] = coeffs;
  }
  return out;
}

Configuration configuration_from_json(const Json &j) {
  const int d = int_field(j, "d");
  std::vector<std::vector<int>> words;
  for (const Json &w : array_field(j, "words"))
    words.push_back(index_list(w));
  std::vector<GaussianRational> coeffs;
  if (j.contains("coeffs") && !j.at("coeffs").is_null())
    for (const Json &c : array_field(j, "coeffs"))
      coeffs.push_back(coeff_from_json(c));
  try {
    return Configuration::make(d, words, std::move(coeffs));
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

Json lie_to_json(const LieElement &x) {
  auto matrix = [](const Matrix &m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c)
        row.push_back(coeff_to_json(m.at(r, c)));
      rows.push_back(row);
    }
    return rows;
  };
  return {{"A", matrix(x.A)}, {"beta", matrix(x.beta)}, {"B", matrix(x.B)}};
}

std::string vertex_name(int index) {
  std::string name(1, static_cast<char>('A' + index % 26));
  if (index >= 26)
    name += std::to_string(index / 26);
  return name;
}

Json type_to_json(const CombinatorialType &t) {
  Json words = Json::array();
  for (uint32_t w : t.code)
    words.push_back(IndexSet(w).indices());
  Json edges = Json::array();
  for (const auto &[pair, e] : t.edges)
    edges.push_back({{"vertices", {vertex_name(pair.first), vertex_name(pair.second)}}, {"e", e}});
  Json tetras = Json::array();
  for (const auto &[quad, v] : t.tetras) {
    Json names = Json::array();
    for (int q : quad)
      names.push_back(vertex_name(q));
    tetras.push_back({{"vertices", names}, {"t", v}});
  }
  return {{"d", t.half_dim}, {"k", t.k()},         {"code", t.code_string()},
          {"words", words},  {"edges", edges},     {"tetras", tetras}};
}

std::string type_to_dot(const CombinatorialType &t, const std::string &name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=plaintext];\n";
  os << "  edge [color=blue, penwidth=3];\n";
  for (int v = 0; v < t.k(); ++v)
    os << "  " << vertex_name(v) << ";\n";
  for (const auto &[pair, e] : t.edges)
    os << "  " << vertex_name(pair.first) << " -- " << vertex_name(pair.second) << " [label=\"" << e << "\"];\n";
  os << "}\n";
  return os.str();
}

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Spinor spinor_from_document(const Json &j) {
  if (j.is_object() && j.contains("words"))
    return spinor_of(configuration_from_json(j));
  return spinor_from_json(j);
}

}  // namespace spinorb
