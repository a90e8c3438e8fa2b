#include "morseres/ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace morseres {

Exps lcm(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool divides(const Exps& a, const Exps& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int total_degree(const Exps& u) {
  int d = 0;
  for (int x : u) d += x;
  return d;
}

int popcount(Subset t) { return std::popcount(t); }

std::string subset_str(Subset t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int j = 0; j < 64; ++j)
    if (t >> j & 1) {
      if (!first) os << ',';
      os << j + 1;
      first = false;
    }
  os << '}';
  return os.str();
}

std::vector<int> subset_members(Subset t) {
  std::vector<int> out;
  for (int j = 0; j < 64; ++j)
    if (t >> j & 1) out.push_back(j + 1);
  return out;
}

Subset subset_of(const std::vector<int>& members) {
  Subset t = 0;
  for (int j : members) t |= Subset(1) << (j - 1);
  return t;
}

Exps Ideal::label(Subset t) const {
  Exps m(n, 0);
  for (int j = 0; j < q(); ++j)
    if (t >> j & 1)
      for (int i = 0; i < n; ++i) m[i] = std::max(m[i], gens[j][i]);
  return m;
}

static void check_shape(const std::vector<Exps>& gens) {
  if (gens.empty()) throw input_error("no generators given");
  if (gens.size() > 64) throw input_error("more than 64 generators");
  const size_t n = gens[0].size();
  if (n == 0) throw input_error("generators have zero variables");
  for (const auto& g : gens) {
    if (g.size() != n) throw input_error("exponent vectors are not rectangular");
    bool nonzero = false;
    for (int x : g) {
      if (x < 0) throw input_error("negative exponent");
      if (x > 0) nonzero = true;
    }
    if (!nonzero) throw input_error("the unit monomial cannot be a generator");
  }
}

Ideal make_ideal(std::vector<Exps> gens) {
  check_shape(gens);
  Ideal I;
  I.n = static_cast<int>(gens[0].size());
  I.r = static_cast<int>(gens.size());
  I.gens = std::move(gens);
  return I;
}

Ideal artinian_reduction(std::vector<Exps> gens, Exps e) {
  check_shape(gens);
  const int n = static_cast<int>(gens[0].size());
  const int r = static_cast<int>(gens.size());
  if (r + n > 64) throw input_error("more than 64 generators after reduction");

  Exps mx(n, 0);
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i) mx[i] = std::max(mx[i], g[i]);
  for (int i = 0; i < n; ++i)
    if (mx[i] == 0) {
      std::ostringstream os;
      os << "variable " << i + 1 << " does not appear in any generator";
      throw input_error(os.str());
    }
  for (const auto& g : gens) {
    int support = 0;
    for (int x : g)
      if (x > 0) ++support;
    if (support < 2)
      throw input_error(
          "generator is a pure power; it would be absorbed by the added pure "
          "powers and the combined generating set would not be minimal");
  }
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      if (j != k && divides(gens[j], gens[k]))
        throw input_error("generators are not a minimal generating set");

  if (e.empty()) {
    e.resize(n);
    for (int i = 0; i < n; ++i) e[i] = mx[i] + 1;
  }
  if (static_cast<int>(e.size()) != n)
    throw input_error("pure-power exponent vector has wrong width");
  for (int i = 0; i < n; ++i)
    if (e[i] <= mx[i]) {
      std::ostringstream os;
      os << "e_" << i + 1 << " = " << e[i]
         << " must exceed the largest exponent of variable " << i + 1
         << " among the generators (" << mx[i] << ")";
      throw input_error(os.str());
    }

  Ideal I;
  I.n = n;
  I.r = r;
  I.artinian = true;
  I.gens = std::move(gens);
  for (int i = 0; i < n; ++i) {
    Exps p(n, 0);
    p[i] = e[i];
    I.gens.push_back(std::move(p));
  }
  I.e = std::move(e);
  return I;
}

static void check_width(const Ideal& I) {
  if (I.q() > 20)
    throw input_error("subset enumeration limited to 20 generators");
}

std::map<Exps, std::vector<Subset>> lcm_lattice(const Ideal& I) {
  check_width(I);
  std::map<Exps, std::vector<Subset>> fib;
  const Subset top = I.full();
  for (Subset t = 1; t <= top; ++t) fib[I.label(t)].push_back(t);
  return fib;
}

std::vector<Subset> scarf_complex(const Ideal& I) {
  check_width(I);
  std::map<Exps, int> count;
  const Subset top = I.full();
  for (Subset t = 0; t <= top; ++t) ++count[I.label(t)];
  std::vector<Subset> faces;
  std::set<Subset> fset;
  for (Subset t = 0; t <= top; ++t)
    if (count[I.label(t)] == 1) {
      faces.push_back(t);
      fset.insert(t);
    }
  for (Subset f : faces)
    for (int j = 0; j < I.q(); ++j)
      if (f >> j & 1 && !fset.count(f ^ (Subset(1) << j)))
        throw input_error("internal: unique-label faces not downward closed");
  std::sort(faces.begin(), faces.end(), [](Subset a, Subset b) {
    return std::pair(popcount(a), a) < std::pair(popcount(b), b);
  });
  return faces;
}

}  // namespace morseres
