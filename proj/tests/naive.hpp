#pragma once

// Slow, direct implementations of the definitions, used only to cross-check
// the library. Everything here works on raw bitmasks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace naive {

using Mask = std::uint64_t;

inline bool has(Mask m, int v) { return (m >> v) & 1ULL; }
inline Mask bit(int v) { return 1ULL << v; }

inline bool shadow_has(const std::vector<Mask>& edges, int x, int y) {
  for (Mask e : edges)
    if (has(e, x) && has(e, y)) return true;
  return false;
}

// Can the consecutive pairs of seq be given distinct edges?
inline bool distinct_representatives(const std::vector<Mask>& edges, const std::vector<int>& seq, bool cyclic) {
  std::size_t pairs = cyclic ? seq.size() : seq.size() - 1;
  std::vector<bool> used(edges.size(), false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == pairs) return true;
    int a = seq[i], b = seq[(i + 1) % seq.size()];
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (used[j] || !has(edges[j], a) || !has(edges[j], b)) continue;
      used[j] = true;
      if (go(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return go(0);
}

// Visits every sequence of distinct vertices of length >= 1.
inline void for_each_sequence(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> seq;
  std::function<void(Mask)> go = [&](Mask used) {
    if (!seq.empty()) fn(seq);
    for (int v = 0; v < n; ++v) {
      if (has(used, v)) continue;
      seq.push_back(v);
      go(used | bit(v));
      seq.pop_back();
    }
  };
  go(0);
}

// Length of a longest Berge cycle (>= 2), 0 when there is none.
inline int longest_cycle(int n, const std::vector<Mask>& edges) {
  int best = 0;
  for_each_sequence(n, [&](const std::vector<int>& s) {
    int l = static_cast<int>(s.size());
    if (l < 2 || l <= best) return;
    if (*std::min_element(s.begin(), s.end()) != s[0]) return;
    if (distinct_representatives(edges, s, true)) best = l;
  });
  return best;
}

// Number of base vertices of a longest Berge path (>= 2), 0 when none.
inline int longest_path_vertices(int n, const std::vector<Mask>& edges) {
  int best = 0;
  for_each_sequence(n, [&](const std::vector<int>& s) {
    int l = static_cast<int>(s.size());
    if (l < 2 || l <= best) return;
    if (distinct_representatives(edges, s, false)) best = l;
  });
  return best;
}

// Graphs as adjacency masks.
using Adj = std::vector<Mask>;

inline Adj empty_graph(int n) { return Adj(n, 0); }
inline void add(Adj& g, int u, int v) {
  g[u] |= bit(v);
  g[v] |= bit(u);
}

inline bool is_ham(const Adj& g) {
  int n = static_cast<int>(g.size());
  if (n < 3) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = has(g[p[i]], p[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

inline int circumference(const Adj& g) {
  int n = static_cast<int>(g.size());
  int best = 0;
  for (Mask s = 1; s < (1ULL << n); ++s) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (has(s, v)) vs.push_back(v);
    int l = static_cast<int>(vs.size());
    if (l < 3 || l <= best) continue;
    do {
      bool ok = true;
      for (int i = 0; i < l && ok; ++i) ok = has(g[vs[i]], vs[(i + 1) % l]);
      if (ok) {
        best = l;
        break;
      }
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return best;
}

inline std::uint64_t cliques(const Adj& g, int r) {
  int n = static_cast<int>(g.size());
  std::uint64_t count = 0;
  for (Mask s = 0; s < (1ULL << n); ++s) {
    if (__builtin_popcountll(s) != r) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (has(s, u) && has(s, v)) ok = has(g[u], v);
    count += ok;
  }
  return count;
}

inline int edges(const Adj& g) {
  int total = 0;
  for (Mask m : g) total += __builtin_popcountll(m);
  return total / 2;
}

inline int min_degree(const Adj& g) {
  int d = 64;
  for (Mask m : g) d = std::min(d, __builtin_popcountll(m));
  return g.empty() ? 0 : d;
}

// Graph number `code` on n vertices: bit i of code is the i-th pair in
// (0,1),(0,2),...,(n-2,n-1) order.
inline Adj graph_from_code(int n, std::uint64_t code) {
  Adj g = empty_graph(n);
  int i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++i)
      if (has(code, i)) add(g, u, v);
  return g;
}

// Closure by repeated full passes until stable.
inline Adj closure(Adj g) {
  int n = static_cast<int>(g.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!has(g[u], v) && __builtin_popcountll(g[u]) + __builtin_popcountll(g[v]) >= n) {
          add(g, u, v);
          changed = true;
        }
  }
  return g;
}

// Independent e(n,d): maximize over the two candidate values by direct
// arithmetic.
inline long long erdos(int n, int d) {
  auto c2 = [](long long m) { return m * (m - 1) / 2; };
  auto h = [&](int dd) { return c2(n - dd) + 1LL * dd * dd; };
  return std::max(h(d), h((n - 1) / 2));
}

}  // namespace naive
