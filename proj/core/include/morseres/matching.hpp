#ifndef MORSERES_MATCHING_HPP
#define MORSERES_MATCHING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "morseres/ideal.hpp"

namespace morseres {

// An edge (T, T \ {j}) of the directed hypercube on subsets of [q],
// larger set first. A matching is a vertex-disjoint set of such edges.
using Matching = std::vector<std::pair<Subset, Subset>>;

// Multigraded Betti table: (homological degree i, multidegree u) -> rank.
using BettiTable = std::map<std::pair<int, Exps>, int>;

struct MatchingCheck {
  bool shape_ok = false;       // covering pairs, vertex-disjoint
  bool homogeneous = false;    // equal labels on every edge
  bool acyclic = false;        // no directed cycle after reversing edges
  std::vector<Subset> cycle;   // witness walk v0..vk with v0 == vk, when cyclic
  std::string error;           // set when !shape_ok
};

MatchingCheck check_matching(const Ideal& I, const Matching& M);

// Nonempty subsets untouched by M, ordered by (size, value).
std::vector<Subset> critical_cells(const Ideal& I, const Matching& M);

// Face-attachment precedence between cells: true when tlow is contained in
// thigh, or reachable in the matched graph from some subset of thigh of the
// same size as tlow.
bool precedes(const Ideal& I, const Matching& M, Subset tlow, Subset thigh);

struct BwReport {
  bool ok = false;
  // When !ok and the matching itself is sound: a critical pair with
  // |high| == |low| + 1, equal labels, and low preceding high.
  Subset low = 0, high = 0;
  std::string reason;  // non-empty when the matching fails basic checks
};

// Checks that the matching is homogeneous and acyclic and that no two
// precedence-adjacent critical cells in consecutive sizes share a label;
// such matchings support a minimal free resolution.
BwReport verify_bw(const Ideal& I, const Matching& M);

// Betti numbers read off the critical cells: each critical T contributes 1
// to beta_{|T|-1, label(T)}. Equals the minimal Betti table when verify_bw
// passes.
BettiTable betti_from_matching(const Ideal& I, const Matching& M);

struct MorseCell {
  Subset index = 0;
  int dim = 0;  // |index| - 1
  Exps degree;
};

struct MorseComplex {
  std::vector<MorseCell> cells;  // ordered by (dim, index)
  // Attachment order between cells of consecutive dimensions: (low, high)
  // with dim(high) == dim(low) + 1 and low preceding high.
  std::vector<std::pair<Subset, Subset>> attachments;
};

MorseComplex morse_complex(const Ideal& I, const Matching& M);

}  // namespace morseres

#endif
