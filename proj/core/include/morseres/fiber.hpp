#ifndef MORSERES_FIBER_HPP
#define MORSERES_FIBER_HPP

#include "morseres/catalog.hpp"
#include "morseres/matching.hpp"

namespace morseres {

// The lattice fiber of an Artinian ideal at label u, rewritten as the join
// of a simplicial complex with a fixed set. Variables split into
// A = {i : 0 < u_i < e_i} and B = {i : u_i = e_i}; members of the fiber all
// contain Xprime = {r+i : i in B} and avoid V = {j <= r : u_j does not
// divide u}. Complementing within [r] \ V turns the remaining parts into
// the faces of a simplicial complex delta.
struct FiberData {
  std::vector<int> A, B;        // 1-based variable indices
  Subset Xprime = 0;            // generator-index mask
  Subset V = 0;                 // generator-index mask within [r]
  Exps uprime;                  // u restricted to A
  std::vector<Subset> members;  // the fiber itself (masks over [q])
  std::vector<Subset> delta;    // faces, masks over [r]
};

// Throws input_error when u is not a lattice label. Invariants (delta
// downward closed, fiber = faces-of-delta joined with Xprime, size shift)
// are verified eagerly on construction.
FiberData strip_fiber(const Ideal& I, const Exps& u);

// The same complement construction for an arbitrary monomial multiset U:
// V = {j : U_j does not divide u} and delta = {T \ V : label of the
// complement of T equals u}. Returns (faces of delta, V); the fiber of u in
// the complemented hypercube is delta joined with {V}.
std::pair<std::vector<Subset>, Subset> delta_of_fiber(
    const std::vector<Exps>& U, const Exps& u);

// The complement bijection between fiber members and faces of delta, and
// its inverse. phi reverses inclusion and shifts sizes by one.
Subset phi(const FiberData& f, const Ideal& I, Subset member);
Subset phi_inv(const FiberData& f, const Ideal& I, Subset face);

// Matches delta against the catalog up to vertex relabeling. Candidate
// relabelings are tried in decreasing lexicographic order of the image
// sequence, so the choice is deterministic. Returns the entry index and the
// vertex map delta-vertex (1-based generator index) -> catalog vertex.
std::pair<int, std::vector<std::pair<int, int>>> match_complex(
    const Catalog& cat, const std::vector<Subset>& delta);

// Acyclic homogeneous matching on the fiber at u, lifted from the catalog
// matching of its stripped complex through phi.
Matching fiber_matching(const Ideal& I, const Exps& u, const Catalog& cat);

// Union of fiber matchings over all lattice labels in lexicographic order.
// Homogeneous by construction; acyclic and BW for the ideal classes covered
// by the catalog.
Matching assemble_matching(const Ideal& I, const Catalog& cat);

// Edges with both endpoints inside [r]: a matching for the underlying
// ideal J of an Artinian reduction.
Matching restrict_to_subideal(const Ideal& I, const Matching& M);

}  // namespace morseres

#endif
