#ifndef MORSERES_DOCUMENT_HPP
#define MORSERES_DOCUMENT_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "morseres/matching.hpp"

namespace morseres {

// Input document:
//   {
//     "variables":  ["x1", "x2", ...],          // unique names
//     "generators": [[1,1,0], [1,0,1], ...],    // rectangular, width == #variables
//     "artinian":   "auto" | [e_1,...,e_n]      // optional; absent -> plain ideal
//   }
struct IdealDocument {
  std::vector<std::string> variables;
  std::vector<Exps> generators;
  bool artinian = false;
  Exps e;  // meaningful only when artinian; empty means "auto"

  Ideal build() const;  // throws input_error with the violated clause
};

IdealDocument parse_document(const nlohmann::json& j);
IdealDocument read_document(std::istream& in);           // JSON from a stream
IdealDocument read_document_file(const std::string& path);  // "" or "-" -> stdin

std::string monomial_str(const Exps& u, const std::vector<std::string>& vars);
std::vector<std::string> default_variables(int n);

// Stable JSON encodings used by the CLI. Subsets are ascending 1-based
// index arrays; multidegrees are exponent vectors.
nlohmann::json betti_json(const BettiTable& t, const std::vector<std::string>& vars);
nlohmann::json matching_json(const Matching& m);
nlohmann::json morse_complex_json(const MorseComplex& mc,
                                  const std::vector<std::string>& vars);
MorseComplex morse_complex_from_json(const nlohmann::json& j);

}  // namespace morseres

#endif
