#pragma once

// Random members of the five dense nonhamiltonian classes together with a
// random swap plan of the admissible shape, relabelled by a random
// permutation.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "berge/graph_ham.hpp"

namespace testing_util {

struct ClassInstance {
  berge::Graph g;
  berge::ClassWitness w;
  berge::SwapPlan plan;
};

inline std::vector<berge::VertexPair> pairs_of(const berge::Graph& g) { return g.edges(); }

inline ClassInstance random_class_instance(berge::GraphClass cls, int k, std::mt19937_64& rng) {
  using namespace berge;
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  auto pick = [&](int hi) { return static_cast<int>(rng() % static_cast<std::uint64_t>(hi)); };
  const bool odd = cls == GraphClass::G2 || cls == GraphClass::G4;
  const int n = odd ? 2 * k + 1 : 2 * k + 2;
  Graph g(n);
  ClassWitness w;
  w.cls = cls;
  w.k = k;
  auto clique = [&](VertexSet s) {
    auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) g.add_edge(m[i], m[j]);
  };
  switch (cls) {
    case GraphClass::G1:
      w.v1 = VertexSet::range(0, k + 1);
      w.v2 = VertexSet::range(k + 1, n);
      clique(w.v1);
      clique(w.v2);
      if (coin(0.5)) {
        w.e0 = VertexPair(pick(k + 1), k + 1 + pick(k + 1));
        g.add_edge(*w.e0);
      }
      break;
    case GraphClass::G2:
      w.v1 = VertexSet::range(0, k + 1);
      w.v2 = VertexSet::range(k, n);
      w.x0 = k;
      clique(w.v1);
      clique(w.v2);
      break;
    case GraphClass::G3: {
      const int x0 = k;
      w.v1 = VertexSet::range(0, k + 1);
      w.v2 = VertexSet::range(k, n);
      w.x0 = x0;
      clique(w.v1);
      VertexSet rest = VertexSet::range(k + 1, n);
      clique(rest);
      // x0 keeps between 2 and k+1 neighbours in V2
      auto rm = rest.members();
      std::shuffle(rm.begin(), rm.end(), rng);
      int keep = 2 + pick(k);
      VertexSet far;
      for (int i = 0; i < static_cast<int>(rm.size()); ++i) {
        if (i < keep) g.add_edge(x0, rm[i]);
        else far = far.with(rm[i]);
      }
      // drop a random matching among vertices still adjacent to x0
      std::vector<int> near;
      for (int v : rest.members())
        if (!far.contains(v)) near.push_back(v);
      std::shuffle(near.begin(), near.end(), rng);
      int drops = pick(static_cast<int>(near.size()) / 2 + 1);
      for (int i = 0; i < drops; ++i) {
        Graph trial = g;
        trial.remove_edge(near[2 * i], near[2 * i + 1]);
        if (satisfies_class(trial, w)) g = trial;
      }
      break;
    }
    case GraphClass::G4:
      w.v1 = VertexSet::range(0, k);
      w.v2 = VertexSet::range(k, n);
      for (int u = 0; u < k; ++u) {
        for (int v = k; v < n; ++v) g.add_edge(u, v);
        for (int v = u + 1; v < k; ++v)
          if (coin(0.5)) g.add_edge(u, v);
      }
      break;
    case GraphClass::G5:
      w.v1 = VertexSet::range(0, k);
      w.v2 = VertexSet::range(k, n);
      for (int u = 0; u < k; ++u) {
        for (int v = k; v < n; ++v) g.add_edge(u, v);
        for (int v = u + 1; v < k; ++v)
          if (coin(0.5)) g.add_edge(u, v);
      }
      if (coin(0.6)) {
        int a = k + pick(k + 2), b = k + pick(k + 2);
        if (a != b) {
          w.e0 = VertexPair(a, b);
          g.add_edge(*w.e0);
          if (coin(0.5)) g.remove_edge(pick(k), a);
          if (coin(0.5)) g.remove_edge(pick(k), b);
        }
      }
      break;
  }

  // plan
  SwapPlan plan;
  std::size_t max_removed = (cls == GraphClass::G1 || cls == GraphClass::G5) ? 2 : 1;
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  std::size_t removed = static_cast<std::size_t>(pick(static_cast<int>(max_removed) + 1));
  plan.removed.assign(edges.begin(), edges.begin() + static_cast<long>(removed));
  const VertexSet x0 = w.x0 ? VertexSet::single(*w.x0) : VertexSet{};
  std::vector<VertexPair> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      VertexPair p(u, v);
      VertexSet a = w.v1 - x0, b = w.v2 - x0;
      bool cross = (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u));
      bool in_v2 = w.v2.contains(u) && w.v2.contains(v);
      if ((cls == GraphClass::G4 || cls == GraphClass::G5) ? in_v2 : cross) candidates.push_back(p);
    }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  if (cls == GraphClass::G1) {
    for (std::size_t i = 1; i < candidates.size(); ++i)
      if (!candidates[0].as_set().intersects(candidates[i].as_set())) {
        plan.added = {candidates[0], candidates[i]};
        break;
      }
  } else if (cls == GraphClass::G5) {
    plan.added = {candidates[0], candidates[1]};
  } else {
    plan.added = {candidates[0]};
  }

  // relabel
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto map_set = [&](VertexSet s) {
    VertexSet out;
    for (int v : s.members()) out = out.with(perm[v]);
    return out;
  };
  auto map_pair = [&](VertexPair p) { return VertexPair(perm[p.u], perm[p.v]); };
  Graph h(n);
  for (auto p : g.edges()) h.add_edge(map_pair(p));
  ClassWitness mw = w;
  mw.v1 = map_set(w.v1);
  mw.v2 = map_set(w.v2);
  if (w.x0) mw.x0 = perm[*w.x0];
  if (w.e0) mw.e0 = map_pair(*w.e0);
  SwapPlan mp;
  for (auto p : plan.removed) mp.removed.push_back(map_pair(p));
  for (auto p : plan.added) mp.added.push_back(map_pair(p));
  return {h, mw, mp};
}

// G3 at the given k in the one configuration where the swap is not
// guaranteed: x0 has exactly two neighbours x2, y2 in V2, the rest of V2 is
// complete, A = {x0 y2}, B = {x1 x2}.
inline ClassInstance exceptional_g3(int k) {
  using namespace berge;
  const int n = 2 * k + 2;
  const int x0 = k, x1 = 0, x2 = k + 1, y2 = k + 2;
  Graph g(n);
  for (int u = 0; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);
  for (int u = k + 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  g.add_edge(x0, x2);
  g.add_edge(x0, y2);
  ClassWitness w{GraphClass::G3, VertexSet::range(0, k + 1), VertexSet::range(k, n), x0, std::nullopt, k};
  SwapPlan plan{{VertexPair(x0, y2)}, {VertexPair(x1, x2)}};
  return {g, w, plan};
}

}  // namespace testing_util
