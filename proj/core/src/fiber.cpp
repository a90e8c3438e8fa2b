#include "morseres/fiber.hpp"

#include <algorithm>
#include <set>

namespace morseres {

FiberData strip_fiber(const Ideal& I, const Exps& u) {
  if (!I.artinian) throw input_error("fiber stripping needs an Artinian reduction");
  FiberData f;
  const int n = I.n, r = I.r;
  for (int i = 0; i < n; ++i) {
    if (u[i] > 0 && u[i] < I.e[i]) f.A.push_back(i + 1);
    if (u[i] == I.e[i]) {
      f.B.push_back(i + 1);
      f.Xprime |= Subset(1) << (r + i);
    }
  }
  f.uprime.assign(n, 0);
  for (int i : f.A) f.uprime[i - 1] = u[i - 1];

  // generators of J restricted to the A-variables
  std::vector<Exps> up(r, Exps(n, 0));
  for (int j = 0; j < r; ++j)
    for (int i : f.A) up[j][i - 1] = I.gens[j][i - 1];

  for (int j = 0; j < r; ++j)
    if (!divides(I.gens[j], u)) f.V |= Subset(1) << j;

  std::vector<int> w;  // [r] minus V, 0-based
  for (int j = 0; j < r; ++j)
    if (!(f.V >> j & 1)) w.push_back(j);

  const Subset wall = (Subset(1) << w.size()) - 1;
  for (Subset sub = 0;; ++sub) {
    Exps m(n, 0);
    Subset tm = 0;
    for (size_t k = 0; k < w.size(); ++k)
      if (sub >> k & 1) {
        tm |= Subset(1) << w[k];
        m = lcm(m, up[w[k]]);
      }
    if (m == f.uprime) {
      Subset face = 0;
      for (int j : w)
        if (!(tm >> j & 1)) face |= Subset(1) << j;
      f.delta.push_back(face);
      f.members.push_back(tm | f.Xprime);
    }
    if (sub == wall) break;
  }
  std::sort(f.delta.begin(), f.delta.end());
  std::sort(f.members.begin(), f.members.end());

  if (f.members.empty())
    throw input_error("monomial is not a label of the lcm lattice");
  // eager invariant checks: delta is downward closed and the complement
  // bijection round-trips
  std::set<Subset> dset(f.delta.begin(), f.delta.end());
  for (Subset face : f.delta)
    for (int j = 0; j < r; ++j)
      if (face >> j & 1 && !dset.count(face ^ (Subset(1) << j)))
        throw input_error("internal: stripped complex not downward closed");
  for (size_t k = 0; k < f.members.size(); ++k)
    if (phi_inv(f, I, phi(f, I, f.members[k])) != f.members[k])
      throw input_error("internal: fiber complement map failed to round-trip");
  return f;
}

std::pair<std::vector<Subset>, Subset> delta_of_fiber(const std::vector<Exps>& U,
                                                      const Exps& u) {
  const int q = static_cast<int>(U.size());
  if (q > 20) throw input_error("more than 20 monomials");
  Subset V = 0;
  Exps all(u.size(), 0);
  for (int j = 0; j < q; ++j) {
    if (!divides(U[j], u)) V |= Subset(1) << j;
    all = lcm(all, U[j]);
  }
  const Subset full = (Subset(1) << q) - 1;
  std::set<Subset> faces;
  for (Subset t = 0;; ++t) {
    Exps m(u.size(), 0);
    for (int j = 0; j < q; ++j)
      if ((full ^ t) >> j & 1) m = lcm(m, U[j]);
    if (m == u) faces.insert(t & ~V);
    if (t == full) break;
  }
  if (faces.empty()) throw input_error("monomial is not an lcm of the multiset");
  for (Subset face : faces)
    for (int j = 0; j < q; ++j)
      if (face >> j & 1 && !faces.count(face ^ (Subset(1) << j)))
        throw input_error("internal: complement complex not downward closed");
  return {std::vector<Subset>(faces.begin(), faces.end()), V};
}

Subset phi(const FiberData& f, const Ideal& I, Subset member) {
  const Subset rmask = (Subset(1) << I.r) - 1;
  return (rmask & ~(member & rmask)) & ~f.V;
}

Subset phi_inv(const FiberData& f, const Ideal& I, Subset face) {
  const Subset rmask = (Subset(1) << I.r) - 1;
  return ((rmask & ~face) & ~f.V) | f.Xprime;
}

std::pair<int, std::vector<std::pair<int, int>>> match_complex(
    const Catalog& cat, const std::vector<Subset>& delta) {
  Subset support = 0;
  for (Subset face : delta) support |= face;
  std::vector<int> supp = subset_members(support);  // 1-based generator indices

  std::set<Subset> want;
  for (Subset face : delta) want.insert(face);

  for (size_t ci = 0; ci < cat.entries.size(); ++ci) {
    const CatalogEntry& e = cat.entries[ci];
    Subset csup = 0;
    for (Subset face : e.faces) csup |= face;
    std::vector<int> cverts = subset_members(csup);
    if (cverts.size() != supp.size() || e.faces.size() != delta.size()) continue;

    std::set<Subset> cfaces(e.faces.begin(), e.faces.end());
    // try images in decreasing lexicographic order; the first hit is the
    // canonical relabeling
    std::vector<int> perm = cverts;
    std::sort(perm.rbegin(), perm.rend());
    do {
      bool ok = true;
      for (Subset face : want) {
        Subset img = 0;
        for (size_t k = 0; k < supp.size(); ++k)
          if (face >> (supp[k] - 1) & 1) img |= Subset(1) << (perm[k] - 1);
        if (!cfaces.count(img)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        std::vector<std::pair<int, int>> map;
        for (size_t k = 0; k < supp.size(); ++k) map.emplace_back(supp[k], perm[k]);
        return {static_cast<int>(ci), map};
      }
    } while (std::prev_permutation(perm.begin(), perm.end()));
  }
  throw input_error(
      "fiber complex not covered by the catalog (more than four relevant "
      "generators at one lattice label)");
}

Matching fiber_matching(const Ideal& I, const Exps& u, const Catalog& cat) {
  FiberData f = strip_fiber(I, u);
  auto [ci, vmap] = match_complex(cat, f.delta);

  // invert the vertex map: catalog vertex -> generator index
  int inv[5] = {0, 0, 0, 0, 0};
  for (auto [gen, cv] : vmap) inv[cv] = gen;

  Matching out;
  for (auto [big, small] : cat.entries[ci].matching) {
    auto pull = [&](Subset cface) {
      Subset face = 0;
      for (int v = 1; v <= 4; ++v)
        if (cface >> (v - 1) & 1) face |= Subset(1) << (inv[v] - 1);
      return face;
    };
    // phi reverses inclusion: the smaller face lifts to the bigger subset
    Subset tb = phi_inv(f, I, pull(small));
    Subset ts = phi_inv(f, I, pull(big));
    out.emplace_back(tb, ts);
  }
  return out;
}

Matching assemble_matching(const Ideal& I, const Catalog& cat) {
  Matching M;
  for (const auto& [u, fiber] : lcm_lattice(I)) {
    Matching part = fiber_matching(I, u, cat);
    M.insert(M.end(), part.begin(), part.end());
  }
  return M;
}

Matching restrict_to_subideal(const Ideal& I, const Matching& M) {
  if (!I.artinian) throw input_error("restriction needs an Artinian reduction");
  const Subset rmask = (Subset(1) << I.r) - 1;
  Matching out;
  for (auto [big, small] : M)
    if ((big & ~rmask) == 0) out.emplace_back(big, small);
  return out;
}

}  // namespace morseres
