#pragma once

#include <random>
#include <vector>

#include "berge/hypercore.hpp"
#include "naive.hpp"

namespace testing_util {

inline std::vector<naive::Mask> masks(const berge::Hypergraph& h) {
  std::vector<naive::Mask> out;
  for (auto e : h.edges()) out.push_back(e.bits());
  return out;
}

inline naive::Adj adj(const berge::Graph& g) {
  naive::Adj a(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) a[v] = g.neighbors(v).bits();
  return a;
}

inline berge::Graph graph(const naive::Adj& a) {
  berge::Graph g(static_cast<int>(a.size()));
  for (int u = 0; u < static_cast<int>(a.size()); ++u)
    for (int v = u + 1; v < static_cast<int>(a.size()); ++v)
      if (naive::has(a[u], v)) g.add_edge(u, v);
  return g;
}

inline berge::Hypergraph random_hyper(std::mt19937_64& rng, int n, double p, int min_size = 1) {
  std::bernoulli_distribution keep(p);
  std::vector<berge::VertexSet> edges;
  for (std::uint64_t m = 1; m < (1ULL << n); ++m)
    if (__builtin_popcountll(m) >= min_size && keep(rng)) edges.push_back(berge::VertexSet{m});
  return berge::Hypergraph(n, edges);
}

inline berge::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution keep(p);
  berge::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (keep(rng)) g.add_edge(u, v);
  return g;
}

inline berge::Graph complete(int n) {
  berge::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Cliques on the given vertex sets, unioned.
inline berge::Graph cliques(int n, std::initializer_list<berge::VertexSet> parts) {
  berge::Graph g(n);
  for (auto s : parts) {
    auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) g.add_edge(m[i], m[j]);
  }
  return g;
}

}  // namespace testing_util
