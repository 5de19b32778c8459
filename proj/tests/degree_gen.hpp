#pragma once

// Hypergraphs with minimum degree exactly 2^(k-2)+1 and no Berge cycle of
// length k: disjoint complete hypergraphs on (k-1)-sets, glued either by one
// union edge per run of consecutive groups or, for k = 3, by an apex vertex.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "berge/hypercore.hpp"

namespace testing_util {

inline berge::Hypergraph no_long_cycle_instance(int k, int max_n, std::mt19937_64& rng) {
  using namespace berge;
  const int block = k - 1;
  const int max_groups = max_n / block;
  const bool apex = k == 3 && (rng() % 3 == 0) && max_n >= 3 * block + 1;
  std::vector<VertexSet> edges;
  int n = 0;
  if (apex) {
    int groups = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>((max_n - 1) / block - 2));
    n = groups * block + 1;
    const int x = n - 1;
    for (int g = 0; g < groups; ++g) {
      VertexSet a = VertexSet::range(g * block, (g + 1) * block);
      for (auto s : all_subsets(a, 1)) edges.push_back(s);
      edges.push_back(a.with(x));
    }
  } else {
    int groups = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_groups - 1));
    n = groups * block;
    for (int g = 0; g < groups; ++g)
      for (auto s : all_subsets(VertexSet::range(g * block, (g + 1) * block), 1)) edges.push_back(s);
    // split the groups into runs of length >= 2, one union edge per run
    int g = 0;
    while (g < groups) {
      int left = groups - g;
      int len = left <= 3 ? left : 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(left - 3));
      edges.push_back(VertexSet::range(g * block, (g + len) * block));
      g += len;
    }
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<VertexSet> relabelled;
  for (auto e : edges) {
    VertexSet out;
    for (int v : e.members()) out = out.with(perm[v]);
    relabelled.push_back(out);
  }
  return Hypergraph(n, relabelled);
}

}  // namespace testing_util
