#include "morseres/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include <filesystem>

#ifndef MORSERES_INSTALL_CATALOG
#define MORSERES_INSTALL_CATALOG "catalog.json"
#endif
#ifndef MORSERES_SOURCE_CATALOG
#define MORSERES_SOURCE_CATALOG "catalog.json"
#endif

namespace morseres {

namespace {

Subset face_of(const nlohmann::json& arr, int idx, const char* what) {
  Subset f = 0;
  for (const auto& v : arr) {
    int x = v.get<int>();
    if (x < 1 || x > 4) {
      std::ostringstream os;
      os << "catalog entry " << idx << ": " << what << " vertex " << x
         << " out of range 1..4";
      throw input_error(os.str());
    }
    f |= Subset(1) << (x - 1);
  }
  return f;
}

// Acyclicity of the matched face graph; same alternating-walk argument as
// for hypercube matchings, restricted to the matched faces.
bool matching_acyclic(const CatalogEntry& e) {
  std::set<Subset> verts;
  std::map<Subset, Subset> up;
  std::set<std::pair<Subset, Subset>> down;
  for (auto [big, small] : e.matching) {
    verts.insert(big);
    verts.insert(small);
    up[small] = big;
    down.insert({big, small});
  }
  std::map<Subset, int> color;
  std::vector<Subset> order;
  // tiny graphs: recursive lambda is fine
  std::function<bool(Subset)> dfs = [&](Subset u) -> bool {
    color[u] = 1;
    auto visit = [&](Subset v) -> bool {
      if (!verts.count(v)) return true;
      if (color[v] == 1) return false;
      if (color[v] == 0 && !dfs(v)) return false;
      return true;
    };
    for (Subset x = u; x;) {
      Subset b = x & -x;
      x ^= b;
      Subset s = u ^ b;
      if (!down.count({u, s}) && !visit(s)) return false;
    }
    auto it = up.find(u);
    if (it != up.end() && !visit(it->second)) return false;
    color[u] = 2;
    return true;
  };
  for (Subset v : verts)
    if (color[v] == 0 && !dfs(v)) return false;
  return true;
}

void validate_entry(const CatalogEntry& e, int idx) {
  auto fail = [&](const std::string& msg) {
    std::ostringstream os;
    os << "catalog entry " << idx << ": " << msg;
    throw input_error(os.str());
  };
  std::set<Subset> faces(e.faces.begin(), e.faces.end());
  for (Subset f : faces)
    for (int v = 0; v < 4; ++v)
      if (f >> v & 1 && !faces.count(f ^ (Subset(1) << v)))
        fail("faces are not closed under taking subsets");
  std::set<Subset> used;
  for (auto [big, small] : e.matching) {
    if (!faces.count(big) || !faces.count(small))
      fail("matching touches a non-face");
    if (popcount(big) != popcount(small) + 1 || (small & ~big) != 0)
      fail("matching pair is not a covering pair");
    if (used.count(big) || used.count(small))
      fail("matching pairs share a vertex");
    used.insert(big);
    used.insert(small);
  }
  if (!matching_acyclic(e)) fail("matching is not acyclic");
}

}  // namespace

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open catalog file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw input_error("catalog file is not valid JSON: " + std::string(ex.what()));
  }
  if (!j.contains("complexes") || !j["complexes"].is_array())
    throw input_error("catalog file lacks a \"complexes\" array");

  Catalog cat;
  int idx = 0;
  for (const auto& je : j["complexes"]) {
    CatalogEntry e;
    for (const auto& f : je.at("facets")) e.facets.push_back(face_of(f, idx, "facet"));
    // downward closure, empty face included
    std::set<Subset> faces = {0};
    for (Subset f : e.facets)
      for (Subset s = f;; s = (s - 1) & f) {
        faces.insert(s);
        if (s == 0) break;
      }
    e.faces.assign(faces.begin(), faces.end());
    for (const auto& pr : je.at("matching"))
      e.matching.emplace_back(face_of(pr.at(0), idx, "matching"),
                              face_of(pr.at(1), idx, "matching"));
    validate_entry(e, idx);
    cat.entries.push_back(std::move(e));
    ++idx;
  }
  return cat;
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("MORSERES_CATALOG"); env && *env)
    return env;
  std::error_code ec;
  if (std::filesystem::exists(MORSERES_INSTALL_CATALOG, ec))
    return MORSERES_INSTALL_CATALOG;
  return MORSERES_SOURCE_CATALOG;
}

const Catalog& builtin_catalog() {
  static Catalog cat = load_catalog(default_catalog_path());
  return cat;
}

}  // namespace morseres
