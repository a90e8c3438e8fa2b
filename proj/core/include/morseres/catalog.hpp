#ifndef MORSERES_CATALOG_HPP
#define MORSERES_CATALOG_HPP

#include <string>
#include <vector>

#include "morseres/matching.hpp"

namespace morseres {

// One isomorphism class of simplicial complexes on at most four vertices
// whose face count is a power of two, together with a fixed acyclic
// matching on its faces. Faces are bitmasks over the vertex set {1..4}
// (bit v-1 <=> vertex v); the empty face is mask 0.
struct CatalogEntry {
  std::vector<Subset> facets;
  std::vector<Subset> faces;  // downward closure of facets, including 0
  Matching matching;          // pairs (face, face minus one vertex)
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

// Loads and validates the catalog data file: every matching must consist of
// vertex-disjoint covering pairs of faces and be acyclic. Throws
// input_error on any violation.
Catalog load_catalog(const std::string& path);

// Resolution order: MORSERES_CATALOG environment variable, then the
// compiled-in location of the shipped data file.
std::string default_catalog_path();
const Catalog& builtin_catalog();  // loaded once from default_catalog_path()

}  // namespace morseres

#endif
