#include "morseres/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace morseres {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; 1LL * d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<Subset> upper_koszul(const Ideal& I, const Exps& u) {
  std::vector<int> supp;
  for (int i = 0; i < I.n; ++i)
    if (u[i] > 0) supp.push_back(i);
  std::vector<Subset> faces;
  const Subset top = supp.empty() ? 0 : (Subset(1) << supp.size()) - 1;
  for (Subset w = 0; w <= top; ++w) {
    Exps v = u;
    for (size_t b = 0; b < supp.size(); ++b)
      if (w >> b & 1) --v[supp[b]];
    bool in_ideal = false;
    for (const auto& g : I.gens)
      if (divides(g, v)) {
        in_ideal = true;
        break;
      }
    if (in_ideal) {
      Subset face = 0;
      for (size_t b = 0; b < supp.size(); ++b)
        if (w >> b & 1) face |= Subset(1) << supp[b];
      faces.push_back(face);
    }
    if (w == top) break;
  }
  return faces;
}

namespace {

int modinv(int a, int p) {
  // p prime; Fermat
  long long r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (m[r][c] % p) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    const int inv = modinv(m[rk][c], p);
    for (int cc = c; cc < cols; ++cc) m[rk][cc] = int(1LL * m[rk][cc] * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rk) continue;
      const int f = m[r][c] % p;
      if (!f) continue;
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = int(((m[r][cc] - 1LL * f * m[rk][cc]) % p + p) % p);
    }
    ++rk;
  }
  return rk;
}

}  // namespace

std::map<int, int> reduced_homology(const std::vector<Subset>& faces, int p) {
  std::map<int, int> H;
  if (faces.empty()) return H;  // void complex

  std::map<int, std::vector<Subset>> by_dim;
  for (Subset f : faces) by_dim[popcount(f) - 1].push_back(f);
  const int maxd = by_dim.rbegin()->first;

  std::map<int, std::unordered_map<Subset, int>> index;
  for (auto& [d, fs] : by_dim) {
    std::sort(fs.begin(), fs.end());
    for (size_t i = 0; i < fs.size(); ++i) index[d][fs[i]] = static_cast<int>(i);
  }
  auto dim_count = [&](int d) {
    auto it = by_dim.find(d);
    return it == by_dim.end() ? 0 : static_cast<int>(it->second.size());
  };

  // ranks of the boundary maps C_d -> C_{d-1}, d = 0 (augmentation) .. maxd
  std::map<int, int> rank;
  for (int d = 0; d <= maxd; ++d) {
    const int rows = dim_count(d - 1), cols = dim_count(d);
    if (!rows || !cols) {
      rank[d] = 0;
      continue;
    }
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    for (Subset f : by_dim[d]) {
      const int c = index[d][f];
      int pos = 0;
      for (int v = 0; v < 64; ++v)
        if (f >> v & 1) {
          const Subset g = f ^ (Subset(1) << v);
          m[index[d - 1][g]][c] = (pos % 2 == 0) ? 1 : p - 1;
          ++pos;
        }
    }
    rank[d] = rank_mod_p(std::move(m), p);
  }

  for (int d = -1; d <= maxd; ++d) {
    const int ker = (d < 0) ? dim_count(-1) : dim_count(d) - rank[d];
    const int h = ker - (rank.count(d + 1) ? rank[d + 1] : 0);
    if (h) H[d] = h;
  }
  return H;
}

BettiTable minimal_betti(const Ideal& I, int p) {
  if (!is_prime(p)) throw input_error("field characteristic must be prime");
  BettiTable tab;
  for (const auto& [u, fiber] : lcm_lattice(I)) {
    auto H = reduced_homology(upper_koszul(I, u), p);
    for (auto [d, h] : H) tab[{d + 1, u}] = h;
  }
  return tab;
}

}  // namespace morseres
