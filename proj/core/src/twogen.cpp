#include "morseres/twogen.hpp"

#include <algorithm>
#include <set>

namespace morseres {

namespace {

void require_twogen(const Ideal& I) {
  if (!I.artinian || I.r != 2)
    throw input_error(
        "this operation needs an Artinian reduction of a two-generated "
        "ideal (use --method catalog or the generic pipeline otherwise)");
}

bool contains(Subset t, Subset s) { return (t & s) == s; }

}  // namespace

TwoGenPartition twogen_partition(const Ideal& I) {
  require_twogen(I);
  TwoGenPartition P;
  const Exps &a = I.gens[0], &b = I.gens[1];
  for (int i = 0; i < I.n; ++i) {
    const Subset bit = Subset(1) << (i + 2);  // generator index i+3, 1-based
    if (a[i] == b[i]) P.P0 |= bit;
    if (a[i] > b[i]) P.P1 |= bit;
    if (a[i] < b[i]) P.P2 |= bit;
    if (a[i] > 0) P.A |= bit;
    if (b[i] > 0) P.B |= bit;
  }
  return P;
}

Matching twogen_matching(const Ideal& I) {
  TwoGenPartition P = twogen_partition(I);
  const Subset full = I.full();
  Matching M;
  for (Subset t = 1; t <= full; ++t) {
    const bool h1 = t & 1, h2 = t & 2;
    if (h1 && h2 && contains(t, P.P1))
      M.emplace_back(t, t ^ 1);
    else if (h1 && h2 && contains(t, P.P2))
      M.emplace_back(t, t ^ 2);
    else if (h1 && !h2 && contains(t, P.A))
      M.emplace_back(t, t ^ 1);
    else if (!h1 && h2 && contains(t, P.B) && t != (full ^ 1))
      M.emplace_back(t, t ^ 2);
    if (t == full) break;
  }
  return M;
}

namespace {

bool admissible(const TwoGenPartition& P, Subset t) {
  if (!(t & 3)) return false;
  if (!(t & 1) && !contains(t, P.P0 | P.P2 | 2)) return false;
  if (!(t & 2) && !contains(t, P.P0 | P.P1 | 1)) return false;
  return true;
}

}  // namespace

Matching twogen_matching_by_levels(const Ideal& I) {
  TwoGenPartition P = twogen_partition(I);
  const int n = I.n, q = n + 2;
  const Subset full = I.full();

  Exps m1(n, 0), m2(n, 0);  // generator exponents confined to P1 resp. P2
  for (int i = 0; i < n; ++i) {
    const Subset bit = Subset(1) << (i + 2);
    if (P.P1 & bit) m1[i] = I.gens[0][i];
    if (P.P2 & bit) m2[i] = I.gens[1][i];
  }
  auto coprime = [&](const Exps& x, const Exps& y) {
    for (int i = 0; i < n; ++i)
      if (std::min(x[i], y[i]) > 0) return false;
    return true;
  };

  Matching M = {{full, full ^ 1}};
  std::set<Subset> used = {full, full ^ 1};
  for (int k = n + 1; k >= 3; --k) {
    for (Subset t = 1; t <= full; ++t) {
      if (popcount(t) != k || used.count(t) || !admissible(P, t)) {
        if (t == full) break;
        continue;
      }
      const Subset comp = full ^ t;
      const Subset tstar = comp & 3;
      if (tstar == 0) {
        const Exps mc = I.label(comp);
        if (coprime(mc, m1)) {
          M.emplace_back(t, t ^ 1);
          used.insert(t);
          used.insert(t ^ 1);
        } else if (coprime(mc, m2)) {
          M.emplace_back(t, t ^ 2);
          used.insert(t);
          used.insert(t ^ 2);
        }
      } else if (tstar == 1 && contains(t, P.B)) {
        M.emplace_back(t, t ^ 2);
        used.insert(t);
        used.insert(t ^ 2);
      } else if (tstar == 2 && contains(t, P.A)) {
        M.emplace_back(t, t ^ 1);
        used.insert(t);
        used.insert(t ^ 1);
      }
      if (t == full) break;
    }
  }
  return M;
}

std::vector<Subset> twogen_criticals(const Ideal& I) {
  TwoGenPartition P = twogen_partition(I);
  const Subset full = I.full();
  std::vector<Subset> out;
  for (Subset t = 1; t <= full; ++t) {
    const bool h1 = t & 1, h2 = t & 2;
    bool crit;
    if (h1 && h2)
      crit = !contains(t, P.P1) && !contains(t, P.P2);
    else if (h1)
      crit = (contains(t, P.P1 | P.P2) && !contains(t, P.P0)) ||
             (!contains(t, P.P2) && !contains(t, P.A));
    else if (h2)
      crit = !contains(t, P.P1) && !contains(t, P.B);
    else
      crit = !contains(t, P.A) && !contains(t, P.B);
    if (crit) out.push_back(t);
    if (t == full) break;
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    return std::pair(popcount(a), a) < std::pair(popcount(b), b);
  });
  return out;
}

int cm_type(const Ideal& I) {
  TwoGenPartition P = twogen_partition(I);
  return popcount(P.A & P.B) + popcount(P.P1) * popcount(P.P2);
}

ScarfStructure scarf_structure(const Ideal& I) {
  TwoGenPartition P = twogen_partition(I);
  ScarfStructure s;
  if (P.A & P.B) return s;
  s.applicable = true;

  // join of the proper subsets of P1, proper subsets of P2, and all
  // subsets of {1,2}
  auto proper_subsets = [](Subset m) {
    std::vector<Subset> out;
    for (Subset x = m;; x = (x - 1) & m) {
      if (x != m || m == 0) out.push_back(x);
      if (x == 0) break;
    }
    if (m == 0) out.assign(1, 0);
    return out;
  };
  std::set<Subset> faces;
  for (Subset x : proper_subsets(P.P1))
    for (Subset y : proper_subsets(P.P2))
      for (Subset z : {Subset(0), Subset(1), Subset(2), Subset(3)})
        faces.insert(x | y | z);
  for (Subset f : faces)
    if (f) s.faces.push_back(f);
  std::sort(s.faces.begin(), s.faces.end(), [](Subset a, Subset b) {
    return std::pair(popcount(a), a) < std::pair(popcount(b), b);
  });

  const int p1 = popcount(P.P1), p2 = popcount(P.P2);
  auto binom = [](int n, int k) -> long long {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int i = 0;; ++i) {
    long long b = 0;
    for (int a = 0; a < p1; ++a)
      for (int bb = 0; bb < p2; ++bb) {
        const int c = i + 1 - a - bb;
        if (c >= 0 && c <= 2) b += binom(p1, a) * binom(p2, bb) * binom(2, c);
      }
    if (b == 0) break;
    s.betti.push_back(b);
  }
  return s;
}

LevelReport level_check(const Ideal& I) {
  TwoGenPartition P = twogen_partition(I);
  LevelReport rep;
  const Exps &a = I.gens[0], &b = I.gens[1];

  std::set<int> al, be, ga;
  for (int i = 0; i < I.n; ++i) {
    const Subset bit = Subset(1) << (i + 2);
    if (P.P1 & bit) al.insert(a[i] - I.e[i]);
    if (P.P2 & bit) be.insert(b[i] - I.e[i]);
    if (((P.P2 & P.A) | P.P0) & bit) ga.insert(a[i] - I.e[i]);
    if ((P.P1 & P.B) & bit) ga.insert(b[i] - I.e[i]);
  }
  rep.alpha.assign(al.begin(), al.end());
  rep.beta.assign(be.begin(), be.end());
  rep.gamma.assign(ga.begin(), ga.end());

  rep.gap_conditions = al.size() <= 1 && be.size() <= 1 && ga.size() <= 1;
  if (rep.gap_conditions && !al.empty() && !be.empty() && !ga.empty())
    rep.gap_conditions = *ga.begin() == *al.begin() + *be.begin();

  // cross-check straight from the top cells of the matching
  std::vector<Subset> crit = twogen_criticals(I);
  const int top = popcount(crit.back());
  std::set<int> degs;
  for (Subset t : crit)
    if (popcount(t) == top) {
      degs.insert(total_degree(I.label(t)));
      ++rep.top_cells;
    }
  rep.top_degrees.assign(degs.begin(), degs.end());
  rep.level = rep.gap_conditions && degs.size() == 1;
  return rep;
}

}  // namespace morseres
