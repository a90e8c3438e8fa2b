// morseres: minimal free resolutions of monomial ideals through acyclic
// matchings on the lcm lattice, with an independent homology cross-check.
//
// Exit codes: 0 ok, 1 verification/comparison failure, 2 input error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "morseres/catalog.hpp"
#include "morseres/document.hpp"
#include "morseres/fiber.hpp"
#include "morseres/oracle.hpp"
#include "morseres/twogen.hpp"

using namespace morseres;
using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string method = "auto";  // twogen | catalog | algorithm1 | auto
  int field = 2;
  std::string format = "table";
  int max_size = 16;
  std::string file;
};

Matching pick_matching(const Ideal& I, const std::string& method) {
  if (method == "twogen") return twogen_matching(I);
  if (method == "algorithm1") return twogen_matching_by_levels(I);
  if (method == "catalog") {
    if (!I.artinian)
      throw input_error("catalog assembly needs an Artinian reduction");
    return assemble_matching(I, builtin_catalog());
  }
  // auto
  if (I.artinian && I.r == 2) return twogen_matching(I);
  if (I.artinian) return assemble_matching(I, builtin_catalog());
  throw input_error(
      "no matching method applies to a plain ideal; add \"artinian\" to the "
      "input document");
}

void print_betti_table(const BettiTable& t, const std::vector<std::string>& vars,
                       std::ostream& os) {
  std::map<int, long long> totals;
  os << "  i  degree            beta\n";
  for (const auto& [key, v] : t) {
    const auto& [i, u] = key;
    std::string m = monomial_str(u, vars);
    os << "  " << i << "  " << m << std::string(m.size() < 16 ? 16 - m.size() : 1, ' ')
       << "  " << v << "\n";
    totals[i] += v;
  }
  os << "totals:";
  for (auto [i, v] : totals) os << " beta_" << i << "=" << v;
  os << "\n";
}

int cmd_betti(const Ideal& I, const IdealDocument& doc, const Options& opt) {
  BettiTable t = betti_from_matching(I, pick_matching(I, opt.method));
  if (opt.format == "json")
    std::cout << betti_json(t, doc.variables).dump(2) << "\n";
  else
    print_betti_table(t, doc.variables, std::cout);
  return 0;
}

int cmd_oracle(const Ideal& I, const IdealDocument& doc, const Options& opt) {
  BettiTable t = minimal_betti(I, opt.field);
  if (opt.format == "json")
    std::cout << betti_json(t, doc.variables).dump(2) << "\n";
  else
    print_betti_table(t, doc.variables, std::cout);
  return 0;
}

int cmd_compare(const Ideal& I, const IdealDocument& doc, const Options& opt) {
  BettiTable mine = betti_from_matching(I, pick_matching(I, opt.method));
  BettiTable ref = minimal_betti(I, opt.field);
  const bool equal = mine == ref;
  if (opt.format == "json") {
    json diff = json::array();
    for (const auto& [key, v] : mine)
      if (!ref.count(key) || ref.at(key) != v)
        diff.push_back({{"i", key.first},
                        {"degree", key.second},
                        {"matching", v},
                        {"oracle", ref.count(key) ? ref.at(key) : 0}});
    for (const auto& [key, v] : ref)
      if (!mine.count(key))
        diff.push_back({{"i", key.first},
                        {"degree", key.second},
                        {"matching", 0},
                        {"oracle", v}});
    std::cout << json{{"equal", equal},
                      {"matching", betti_json(mine, doc.variables)},
                      {"oracle", betti_json(ref, doc.variables)},
                      {"differences", diff}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "matching-derived table:\n";
    print_betti_table(mine, doc.variables, std::cout);
    std::cout << "oracle table (GF(" << opt.field << ")):\n";
    print_betti_table(ref, doc.variables, std::cout);
    std::cout << (equal ? "tables agree\n" : "tables DIFFER\n");
  }
  return equal ? 0 : 1;
}

int cmd_matching(const Ideal& I, const IdealDocument&, const Options& opt) {
  Matching m = pick_matching(I, opt.method);
  if (opt.format == "json") {
    std::cout << matching_json(m).dump(2) << "\n";
  } else {
    for (auto [big, small] : m)
      std::cout << subset_str(big) << " -> " << subset_str(small) << "\n";
    std::cout << m.size() << " pairs\n";
  }
  return 0;
}

int cmd_verify(const Ideal& I, const IdealDocument&, const Options& opt) {
  Matching m = pick_matching(I, opt.method);
  BwReport rep = verify_bw(I, m);
  if (opt.format == "json") {
    json j = {{"ok", rep.ok}};
    if (!rep.ok && rep.reason.empty())
      j["offending_pair"] = {subset_members(rep.low), subset_members(rep.high)};
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    std::cout << j.dump(2) << "\n";
  } else if (rep.ok) {
    std::cout << "matching supports a minimal free resolution (" << m.size()
              << " pairs, " << critical_cells(I, m).size() << " critical cells)\n";
  } else if (!rep.reason.empty()) {
    std::cout << "verification failed: " << rep.reason << "\n";
  } else {
    std::cout << "verification failed: critical cells " << subset_str(rep.low)
              << " and " << subset_str(rep.high)
              << " share a label and are adjacent in the attachment order\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_cells(const Ideal& I, const IdealDocument& doc, const Options& opt) {
  MorseComplex mc = morse_complex(I, pick_matching(I, opt.method));
  if (opt.format == "json") {
    std::cout << morse_complex_json(mc, doc.variables).dump(2) << "\n";
  } else {
    for (const auto& c : mc.cells)
      std::cout << "dim " << c.dim << "  " << subset_str(c.index) << "  "
                << monomial_str(c.degree, doc.variables) << "\n";
    std::cout << mc.cells.size() << " cells, " << mc.attachments.size()
              << " attachment pairs\n";
  }
  return 0;
}

int cmd_scarf(const Ideal& I, const IdealDocument& doc, const Options& opt) {
  std::vector<Subset> faces = scarf_complex(I);
  json j = {{"faces", json::array()}};
  for (Subset f : faces) j["faces"].push_back(subset_members(f));
  bool structured = false;
  if (I.artinian && I.r == 2) {
    ScarfStructure s = scarf_structure(I);
    if (s.applicable) {
      structured = true;
      j["betti"] = s.betti;
      j["supports_minimal_resolution"] = true;
      // sanity: closed-form faces equal the unique-label faces
      json sf = json::array();
      for (Subset f : s.faces) sf.push_back(subset_members(f));
      j["skeleton_join_faces"] = sf;
    }
  }
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (Subset f : faces) std::cout << subset_str(f) << "\n";
    std::cout << faces.size() << " faces\n";
    if (structured) {
      std::cout << "disjoint supports: Scarf complex supports the minimal "
                   "resolution; betti:";
      for (auto b : j["betti"]) std::cout << " " << b;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_level(const Ideal& I, const IdealDocument&, const Options& opt) {
  LevelReport rep = level_check(I);
  if (opt.format == "json") {
    std::cout << json{{"level", rep.level},
                      {"gap_conditions", rep.gap_conditions},
                      {"alpha", rep.alpha},
                      {"beta", rep.beta},
                      {"gamma", rep.gamma},
                      {"top_degrees", rep.top_degrees},
                      {"top_cells", rep.top_cells}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (rep.level ? "level" : "not level") << "; top degrees:";
    for (int d : rep.top_degrees) std::cout << " " << d;
    std::cout << " (" << rep.top_cells << " top cells)\n";
  }
  return 0;
}

int cmd_cm_type(const Ideal& I, const IdealDocument&, const Options& opt) {
  int t = cm_type(I);
  if (opt.format == "json")
    std::cout << json{{"cm_type", t}}.dump(2) << "\n";
  else
    std::cout << "Cohen-Macaulay type: " << t << "\n";
  return 0;
}

int cmd_reduce(const Ideal& I, const IdealDocument& doc, const Options& opt) {
  if (!I.artinian)
    throw input_error("reduce needs \"artinian\" in the input document");
  json gens = json::array();
  for (const auto& g : I.gens) gens.push_back(g);
  json j = {{"variables", doc.variables},
            {"generators", gens},
            {"pure_power_exponents", I.e},
            {"original_generators", I.r}};
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& g : I.gens)
      std::cout << monomial_str(g, doc.variables) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal cellular resolutions of monomial ideals"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"betti", "multigraded betti numbers from an acyclic matching"},
      {"matching", "list the matched covering pairs"},
      {"verify", "check that the matching yields a minimal resolution"},
      {"scarf", "Scarf complex, with closed-form data when supports are disjoint"},
      {"level", "test whether the quotient ring is level"},
      {"cm-type", "Cohen-Macaulay type of the quotient ring"},
      {"reduce", "print the Artinian reduction's generators"},
      {"oracle", "betti numbers by simplicial homology over GF(p)"},
      {"compare", "compare matching-derived betti numbers against the oracle"},
      {"cells", "cells and attachment pairs of the reduced complex"}};
  for (const auto& [name, desc] : commands) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("--method", opt.method,
                    "matching method: twogen, catalog, algorithm1")
        ->check(CLI::IsMember({"auto", "twogen", "catalog", "algorithm1"}));
    sub->add_option("--field", opt.field, "oracle field characteristic (prime)");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--max-size", opt.max_size,
                    "refuse ideals with more generators than this");
    sub->add_option("file", opt.file, "input document (stdin when absent)");
    sub->callback([&opt, name] { opt.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    IdealDocument doc = read_document_file(opt.file);
    Ideal I = doc.build();
    if (I.q() > opt.max_size)
      throw input_error("ideal has " + std::to_string(I.q()) +
                        " generators; raise --max-size to proceed");
    if (!is_prime(opt.field))
      throw input_error("--field must be a prime");

    if (opt.command == "betti") return cmd_betti(I, doc, opt);
    if (opt.command == "matching") return cmd_matching(I, doc, opt);
    if (opt.command == "verify") return cmd_verify(I, doc, opt);
    if (opt.command == "scarf") return cmd_scarf(I, doc, opt);
    if (opt.command == "level") return cmd_level(I, doc, opt);
    if (opt.command == "cm-type") return cmd_cm_type(I, doc, opt);
    if (opt.command == "reduce") return cmd_reduce(I, doc, opt);
    if (opt.command == "oracle") return cmd_oracle(I, doc, opt);
    if (opt.command == "compare") return cmd_compare(I, doc, opt);
    if (opt.command == "cells") return cmd_cells(I, doc, opt);
    std::cerr << "unknown command\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
