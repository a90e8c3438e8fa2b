#include "morseres/matching.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace morseres {

namespace {

// Successors in the matched graph: covered subsets whose down-edge was not
// matched, plus reversed (upward) matched edges.
struct MatchedGraph {
  std::unordered_set<std::uint64_t> down;           // matched down-edges, key big<<6|bit? use pair hash via big*131+small
  std::unordered_map<Subset, Subset> up;            // small -> big
  static std::uint64_t key(Subset big, Subset small) { return big * 0x9E3779B97F4A7C15ULL ^ small; }

  explicit MatchedGraph(const Matching& M) {
    for (auto [big, small] : M) {
      down.insert(key(big, small));
      up.emplace(small, big);
    }
  }

  template <class F>
  void for_each_succ(Subset t, F&& f) const {
    for (Subset x = t; x;) {
      Subset b = x & -x;
      x ^= b;
      Subset s = t ^ b;
      if (!down.count(key(t, s))) f(s);
    }
    auto it = up.find(t);
    if (it != up.end()) f(it->second);
  }
};

}  // namespace

MatchingCheck check_matching(const Ideal& I, const Matching& M) {
  MatchingCheck out;
  std::unordered_set<Subset> verts;
  for (auto [big, small] : M) {
    if (popcount(big) != popcount(small) + 1 || (small & ~big) != 0) {
      out.error = "edge " + subset_str(big) + " -> " + subset_str(small) +
                  " is not a covering pair";
      return out;
    }
    if (verts.count(big) || verts.count(small)) {
      out.error = "edge " + subset_str(big) + " -> " + subset_str(small) +
                  " shares a vertex with another edge";
      return out;
    }
    verts.insert(big);
    verts.insert(small);
  }
  out.shape_ok = true;

  out.homogeneous = true;
  for (auto [big, small] : M)
    if (I.label(big) != I.label(small)) {
      out.homogeneous = false;
      break;
    }

  // Any directed cycle alternates matched up-edges with down-edges, so it
  // stays inside the matched vertices; DFS there suffices.
  MatchedGraph g(M);
  std::unordered_map<Subset, int> color;  // 0 unseen / 1 on stack / 2 done
  out.acyclic = true;
  for (auto [start, ignored] : M) {
    for (Subset s0 : {start, ignored}) {
      if (color[s0]) continue;
      // iterative DFS with explicit successor lists
      std::vector<std::pair<Subset, std::vector<Subset>>> stack;
      auto push = [&](Subset v) {
        std::vector<Subset> succ;
        g.for_each_succ(v, [&](Subset w) {
          if (verts.count(w)) succ.push_back(w);
        });
        color[v] = 1;
        stack.emplace_back(v, std::move(succ));
      };
      push(s0);
      while (!stack.empty()) {
        auto& [u, succ] = stack.back();
        bool advanced = false;
        while (!succ.empty()) {
          Subset v = succ.back();
          succ.pop_back();
          if (color[v] == 1) {  // back edge: recover the cycle from the stack
            out.acyclic = false;
            out.cycle.clear();
            out.cycle.push_back(v);
            for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
              out.cycle.push_back(it->first);
              if (it->first == v) break;
            }
            std::reverse(out.cycle.begin(), out.cycle.end());
            return out;
          }
          if (color[v] == 0) {
            push(v);
            advanced = true;
            break;
          }
        }
        if (!advanced) {
          color[u] = 2;
          stack.pop_back();
        }
      }
    }
  }
  return out;
}

std::vector<Subset> critical_cells(const Ideal& I, const Matching& M) {
  std::unordered_set<Subset> verts;
  for (auto [big, small] : M) {
    verts.insert(big);
    verts.insert(small);
  }
  std::vector<Subset> out;
  const Subset top = I.full();
  for (Subset t = 1; t <= top && t != 0; ++t)
    if (!verts.count(t)) out.push_back(t);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    return std::pair(popcount(a), a) < std::pair(popcount(b), b);
  });
  return out;
}

bool precedes(const Ideal& I, const Matching& M, Subset tlow, Subset thigh) {
  if ((tlow & ~thigh) == 0) return true;
  const int k = popcount(tlow);
  MatchedGraph g(M);
  std::unordered_set<Subset> seen;
  std::vector<Subset> frontier;
  // start from the size-k subsets of thigh
  for (Subset s = thigh;; s = (s - 1) & thigh) {
    if (popcount(s) == k) {
      seen.insert(s);
      frontier.push_back(s);
    }
    if (s == 0) break;
  }
  while (!frontier.empty()) {
    Subset u = frontier.back();
    frontier.pop_back();
    if (u == tlow) return true;
    g.for_each_succ(u, [&](Subset v) {
      if (seen.insert(v).second) frontier.push_back(v);
    });
  }
  return seen.count(tlow) != 0;
}

BwReport verify_bw(const Ideal& I, const Matching& M) {
  BwReport rep;
  MatchingCheck chk = check_matching(I, M);
  if (!chk.shape_ok) {
    rep.reason = chk.error;
    return rep;
  }
  if (!chk.homogeneous) {
    rep.reason = "matching is not homogeneous";
    return rep;
  }
  if (!chk.acyclic) {
    rep.reason = "matching is not acyclic";
    return rep;
  }
  std::map<int, std::vector<Subset>> by_size;
  for (Subset t : critical_cells(I, M)) by_size[popcount(t)].push_back(t);
  for (auto& [k, highs] : by_size) {
    auto it = by_size.find(k - 1);
    if (it == by_size.end()) continue;
    for (Subset th : highs) {
      Exps lu = I.label(th);
      for (Subset tl : it->second)
        if (I.label(tl) == lu && precedes(I, M, tl, th)) {
          rep.low = tl;
          rep.high = th;
          return rep;
        }
    }
  }
  rep.ok = true;
  return rep;
}

BettiTable betti_from_matching(const Ideal& I, const Matching& M) {
  BettiTable tab;
  for (Subset t : critical_cells(I, M))
    ++tab[{popcount(t) - 1, I.label(t)}];
  return tab;
}

MorseComplex morse_complex(const Ideal& I, const Matching& M) {
  MorseComplex mc;
  std::map<int, std::vector<Subset>> by_size;
  for (Subset t : critical_cells(I, M)) {
    mc.cells.push_back({t, popcount(t) - 1, I.label(t)});
    by_size[popcount(t)].push_back(t);
  }
  for (auto& [k, highs] : by_size) {
    auto it = by_size.find(k - 1);
    if (it == by_size.end()) continue;
    for (Subset th : highs)
      for (Subset tl : it->second)
        if (precedes(I, M, tl, th)) mc.attachments.emplace_back(tl, th);
  }
  return mc;
}

}  // namespace morseres
