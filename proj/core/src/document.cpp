#include "morseres/document.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace morseres {

using nlohmann::json;

Ideal IdealDocument::build() const {
  if (artinian) return artinian_reduction(generators, e);
  return make_ideal(generators);
}

IdealDocument parse_document(const json& j) {
  IdealDocument doc;
  if (!j.is_object()) throw input_error("input document must be a JSON object");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw input_error("document lacks a \"generators\" array");
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) throw input_error("each generator must be an exponent array");
    Exps v;
    for (const auto& x : g) v.push_back(x.get<int>());
    doc.generators.push_back(std::move(v));
  }
  if (doc.generators.empty()) throw input_error("no generators given");

  const size_t n = doc.generators[0].size();
  if (j.contains("variables")) {
    for (const auto& v : j["variables"]) doc.variables.push_back(v.get<std::string>());
    std::set<std::string> uniq(doc.variables.begin(), doc.variables.end());
    if (uniq.size() != doc.variables.size())
      throw input_error("variable names are not unique");
    if (doc.variables.size() != n)
      throw input_error("variable count does not match generator width");
  } else {
    doc.variables = default_variables(static_cast<int>(n));
  }

  if (j.contains("artinian")) {
    doc.artinian = true;
    const auto& a = j["artinian"];
    if (a.is_string()) {
      if (a.get<std::string>() != "auto")
        throw input_error("\"artinian\" must be \"auto\" or an exponent array");
    } else if (a.is_array()) {
      for (const auto& x : a) doc.e.push_back(x.get<int>());
    } else {
      throw input_error("\"artinian\" must be \"auto\" or an exponent array");
    }
  }
  return doc;
}

IdealDocument read_document(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw input_error("input is not valid JSON: " + std::string(ex.what()));
  }
  return parse_document(j);
}

IdealDocument read_document_file(const std::string& path) {
  if (path.empty() || path == "-") return read_document(std::cin);
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file: " + path);
  return read_document(in);
}

std::vector<std::string> default_variables(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::string monomial_str(const Exps& u, const std::vector<std::string>& vars) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    os << vars[i];
    if (u[i] > 1) os << '^' << u[i];
    any = true;
  }
  return any ? os.str() : "1";
}

json betti_json(const BettiTable& t, const std::vector<std::string>& vars) {
  json rows = json::array();
  std::map<int, long long> totals;
  for (const auto& [key, v] : t) {
    const auto& [i, u] = key;
    rows.push_back({{"i", i},
                    {"degree", u},
                    {"monomial", monomial_str(u, vars)},
                    {"value", v}});
    totals[i] += v;
  }
  json tot = json::array();
  for (auto [i, v] : totals) tot.push_back({{"i", i}, {"value", v}});
  return {{"entries", rows}, {"totals", tot}};
}

json matching_json(const Matching& m) {
  json pairs = json::array();
  for (auto [big, small] : m)
    pairs.push_back({subset_members(big), subset_members(small)});
  return {{"pairs", pairs}, {"size", m.size()}};
}

json morse_complex_json(const MorseComplex& mc, const std::vector<std::string>& vars) {
  json cells = json::array();
  for (const auto& c : mc.cells)
    cells.push_back({{"index", subset_members(c.index)},
                     {"dim", c.dim},
                     {"degree", c.degree},
                     {"monomial", monomial_str(c.degree, vars)}});
  json att = json::array();
  for (auto [low, high] : mc.attachments)
    att.push_back({subset_members(low), subset_members(high)});
  return {{"cells", cells}, {"attachments", att}};
}

MorseComplex morse_complex_from_json(const json& j) {
  MorseComplex mc;
  for (const auto& c : j.at("cells")) {
    MorseCell cell;
    cell.index = subset_of(c.at("index").get<std::vector<int>>());
    cell.dim = c.at("dim").get<int>();
    cell.degree = c.at("degree").get<Exps>();
    mc.cells.push_back(std::move(cell));
  }
  for (const auto& a : j.at("attachments"))
    mc.attachments.emplace_back(subset_of(a.at(0).get<std::vector<int>>()),
                                subset_of(a.at(1).get<std::vector<int>>()));
  return mc;
}

}  // namespace morseres
