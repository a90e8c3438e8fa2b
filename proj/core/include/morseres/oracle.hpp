#ifndef MORSERES_ORACLE_HPP
#define MORSERES_ORACLE_HPP

#include "morseres/matching.hpp"

namespace morseres {

// Squarefree sets W (as variable bitmasks, bit i-1 <=> variable i) with
// u / x^W still in I. Empty result means u is not in I.
std::vector<Subset> upper_koszul(const Ideal& I, const Exps& u);

// Reduced homology ranks over GF(p) of a simplicial complex given as the
// full list of its faces (the empty face included unless the complex is
// void). Returns dim -> rank, zero ranks omitted; the void complex gives {}.
std::map<int, int> reduced_homology(const std::vector<Subset>& faces, int p);

// Multigraded Betti numbers of S/I-free resolution of I over GF(p) via
// beta_{i,u} = dim H~_{i-1} of the upper Koszul complex at u, computed for
// every lcm-lattice label (the only multidegrees where they can be nonzero).
BettiTable minimal_betti(const Ideal& I, int p = 2);

bool is_prime(int p);

}  // namespace morseres

#endif
