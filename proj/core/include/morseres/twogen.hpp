#ifndef MORSERES_TWOGEN_HPP
#define MORSERES_TWOGEN_HPP

#include "morseres/matching.hpp"

namespace morseres {

// For an Artinian reduction of a two-generated ideal (u_1 = x^a, u_2 = x^b)
// the q = n+2 generators are u_1, u_2 and the pure powers, so variable i
// corresponds to generator index i+2. The variable classes below are stored
// as generator-index masks:
//   P0: a_i == b_i,  P1: a_i > b_i,  P2: a_i < b_i,
//   A:  a_i > 0,     B:  b_i > 0.
struct TwoGenPartition {
  Subset P0 = 0, P1 = 0, P2 = 0, A = 0, B = 0;
};

TwoGenPartition twogen_partition(const Ideal& I);  // requires artinian, r == 2

// Closed-form homogeneous acyclic matching. Edge rules over subsets T of
// [n+2], checked in order:
//   (T, T\{1}): 1,2 in T and P1 subset of T
//   (T, T\{2}): 1,2 in T, P1 not subset, P2 subset of T
//   (T, T\{1}): 1 in T, 2 not in T, A subset of T
//   (T, T\{2}): 2 in T, 1 not in T, B subset of T, T != [n+2]\{1}
Matching twogen_matching(const Ideal& I);

// Same matching produced level by level from the admissible-set algorithm;
// equal to twogen_matching as a set of edges.
Matching twogen_matching_by_levels(const Ideal& I);

// Critical cells of twogen_matching by the closed-form case analysis
// (no matching construction involved).
std::vector<Subset> twogen_criticals(const Ideal& I);

// Rank of the last module in the minimal resolution: |A∩B| + |P1||P2|.
int cm_type(const Ideal& I);

// When supp(u_1) and supp(u_2) are disjoint (A∩B empty) the critical cells
// form the Scarf complex, the join of the (|P1|-2)-skeleton of the P1
// simplex, the (|P2|-2)-skeleton of the P2 simplex and the full simplex on
// {1,2}. Returns its faces (excluding the empty face) and the closed-form
// Betti numbers beta_i = sum over a+b+c=i+1, a<|P1|, b<|P2| of
// C(|P1|,a) C(|P2|,b) C(2,c).
struct ScarfStructure {
  bool applicable = false;  // A∩B empty
  std::vector<Subset> faces;
  std::vector<long long> betti;  // beta_0, beta_1, ...
};

ScarfStructure scarf_structure(const Ideal& I);

// S/I is level iff all top-dimensional cells of the minimal resolution sit
// in one total degree; equivalently the exponent gaps a_i - e_i on P1,
// b_i - e_i on P2, and the gaps on (P2∩A)∪P0 and P1∩B are constants
// alpha, beta, gamma with gamma = alpha + beta (gamma vacuous when those
// classes are empty).
struct LevelReport {
  bool level = false;
  bool gap_conditions = false;       // the alpha/beta/gamma test
  std::vector<int> alpha, beta, gamma;  // distinct observed gaps per class
  std::vector<int> top_degrees;      // distinct total degrees of top cells
  int top_cells = 0;
};

LevelReport level_check(const Ideal& I);

}  // namespace morseres

#endif
