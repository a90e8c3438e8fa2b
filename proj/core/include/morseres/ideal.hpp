#ifndef MORSERES_IDEAL_HPP
#define MORSERES_IDEAL_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace morseres {

// Exponent vector of a monomial; index i is the exponent of variable i+1.
using Exps = std::vector<int>;

// Subset of generator indices as a bitmask: bit j-1 set <=> generator j in
// the subset. Generators are numbered 1..q, so q <= 64.
using Subset = std::uint64_t;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Exps lcm(const Exps& a, const Exps& b);
bool divides(const Exps& a, const Exps& b);
int total_degree(const Exps& u);

int popcount(Subset t);
std::string subset_str(Subset t);
std::vector<int> subset_members(Subset t);  // ascending, 1-based
Subset subset_of(const std::vector<int>& members);

// A monomial ideal given by generators. When `artinian` is set the generator
// list is u_1..u_r followed by the pure powers x_1^{e_1}..x_n^{e_n}; the
// underlying ideal J is generated by the first r entries alone.
struct Ideal {
  int n = 0;  // variables
  int r = 0;  // generators excluding pure powers (r == q() when plain)
  bool artinian = false;
  std::vector<Exps> gens;
  Exps e;  // pure-power exponents, empty when plain

  int q() const { return static_cast<int>(gens.size()); }
  Exps label(Subset t) const;  // componentwise max over members; {} -> all zero
  Subset full() const { return (q() == 64) ? ~Subset(0) : ((Subset(1) << q()) - 1); }
};

// Plain ideal from a generator list. Throws input_error on malformed input.
Ideal make_ideal(std::vector<Exps> gens);

// Artinian reduction J + (x_1^{e_1},...,x_n^{e_n}). An empty `e` selects
// e_i = 1 + max_j gens[j][i]. Requires every e_i to exceed every exponent
// appearing in J, every variable to appear in J, and no generator of J to be
// a pure power (a pure power x_i^c with c < e_i would make x_i^{e_i}
// redundant and the combined generating set non-minimal).
Ideal artinian_reduction(std::vector<Exps> gens, Exps e = {});

// All nonempty subsets of [q] grouped by label, keyed by the label
// (deterministic lexicographic key order).
std::map<Exps, std::vector<Subset>> lcm_lattice(const Ideal& I);

// Subsets (including {}) whose label is shared by no other subset. Always a
// simplicial complex.
std::vector<Subset> scarf_complex(const Ideal& I);

}  // namespace morseres

#endif
