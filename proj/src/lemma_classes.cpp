#include <algorithm>
#include <functional>

#include "berge/graph_ham.hpp"

namespace berge {

const char* to_string(GraphClass c) noexcept {
  switch (c) {
    case GraphClass::G1: return "G1";
    case GraphClass::G2: return "G2";
    case GraphClass::G3: return "G3";
    case GraphClass::G4: return "G4";
    case GraphClass::G5: return "G5";
  }
  return "?";
}

std::optional<GraphClass> graph_class_from_string(const std::string& s) {
  for (auto c : {GraphClass::G1, GraphClass::G2, GraphClass::G3, GraphClass::G4, GraphClass::G5})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

namespace {

// The single edge inside `s`, if there is exactly one.
std::optional<VertexPair> sole_edge_inside(const Graph& g, VertexSet s) {
  std::optional<VertexPair> found;
  for (int u : s.members())
    for (int v : (g.neighbors(u) & s).members())
      if (u < v) {
        if (found) return std::nullopt;
        found = VertexPair(u, v);
      }
  return found;
}

std::optional<VertexPair> sole_edge_between(const Graph& g, VertexSet a, VertexSet b) {
  std::optional<VertexPair> found;
  for (int u : a.members())
    for (int v : (g.neighbors(u) & b).members()) {
      if (found) return std::nullopt;
      found = VertexPair(u, v);
    }
  return found;
}

bool degrees_at_least(const Graph& g, VertexSet s, int k) {
  for (int v : s.members())
    if (g.degree(v) < k) return false;
  return true;
}

// Calls fn on every size-r subset of `ground`; stops early when fn returns true.
bool for_each_subset(VertexSet ground, int r, const std::function<bool(VertexSet)>& fn) {
  std::vector<int> items = ground.members();
  const int m = static_cast<int>(items.size());
  if (r < 0 || r > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= 1ULL << items[i];
    if (fn(VertexSet{bits})) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool satisfies_class(const Graph& g, const ClassWitness& w, DegreeScope g3_scope) {
  const int n = g.vertex_count();
  const int k = w.k;
  const VertexSet all = VertexSet::range(0, n);
  if (k < 1 || (w.v1 | w.v2) != all) return false;
  const VertexSet common = w.v1 & w.v2;
  switch (w.cls) {
    case GraphClass::G1: {
      if (n != 2 * k + 2 || !common.empty() || w.x0) return false;
      if (w.v1.size() != k + 1 || w.v2.size() != k + 1) return false;
      if (!g.is_clique(w.v1) || !g.is_clique(w.v2)) return false;
      std::size_t cross = g.edges_between(w.v1, w.v2);
      if (cross > 1) return false;
      if (cross == 0) return !w.e0.has_value();
      return w.e0 && w.e0 == sole_edge_between(g, w.v1, w.v2);
    }
    case GraphClass::G2: {
      if (n != 2 * k + 1 || w.e0 || !w.x0) return false;
      if (common != VertexSet::single(*w.x0)) return false;
      if (w.v1.size() != k + 1 || w.v2.size() != k + 1) return false;
      if (!g.is_clique(w.v1) || !g.is_clique(w.v2)) return false;
      return g.edges_between(w.v1 - common, w.v2 - common) == 0;
    }
    case GraphClass::G3: {
      if (n != 2 * k + 2 || w.e0 || !w.x0) return false;
      if (common != VertexSet::single(*w.x0)) return false;
      if (w.v1.size() != k + 1 || w.v2.size() != k + 2) return false;
      if (!g.is_clique(w.v1)) return false;
      if (g.edges_between(w.v1 - common, w.v2 - common) != 0) return false;
      VertexSet scope = g3_scope == DegreeScope::whole_graph ? all : w.v2;
      if (!degrees_at_least(g, scope, k)) return false;
      // G[V2] as a graph on its own vertex set must be 2-connected.
      std::vector<int> ids = w.v2.members();
      Graph sub(static_cast<int>(ids.size()));
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
          if (g.has_edge(ids[i], ids[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
      return is_two_connected(sub);
    }
    case GraphClass::G4: {
      if (n != 2 * k + 1 || !common.empty() || w.x0 || w.e0) return false;
      if (w.v1.size() != k || w.v2.size() != k + 1) return false;
      if (!g.is_independent(w.v2)) return false;
      return g.edges_between(w.v1, w.v2) ==
             static_cast<std::size_t>(w.v1.size()) * static_cast<std::size_t>(w.v2.size());
    }
    case GraphClass::G5: {
      if (n != 2 * k + 2 || !common.empty() || w.x0) return false;
      if (w.v1.size() != k || w.v2.size() != k + 2) return false;
      std::size_t inside = g.edges_inside(w.v2);
      if (inside > 1) return false;
      if (inside == 0 && w.e0) return false;
      if (inside == 1 && w.e0 != sole_edge_inside(g, w.v2)) return false;
      return degrees_at_least(g, all, k);
    }
  }
  return false;
}

std::vector<ClassWitness> match_classes(const Graph& g, int k, bool report_all,
                                        DegreeScope g3_scope) {
  const int n = g.vertex_count();
  const VertexSet all = VertexSet::range(0, n);
  std::vector<ClassWitness> found;
  if (n < 1) return found;
  const int low = 0;

  auto try_witness = [&](ClassWitness w) {
    if (!satisfies_class(g, w, g3_scope)) return false;
    found.push_back(w);
    return true;
  };

  if (n == 2 * k + 2) {
    // G1: V1 is the side holding vertex 0.
    bool hit = for_each_subset(all.without(low), k, [&](VertexSet rest) {
      VertexSet v1 = rest.with(low);
      if (!g.is_clique(v1)) return false;
      VertexSet v2 = all - v1;
      ClassWitness w{GraphClass::G1, v1, v2, std::nullopt, sole_edge_between(g, v1, v2), k};
      if (g.edges_between(v1, v2) == 0) w.e0.reset();
      return try_witness(w);
    });
    if (hit && !report_all) return found;

    // G3: V1 a (k+1)-clique meeting V2 in x0.
    hit = false;
    for (int x0 = 0; x0 < n && !hit; ++x0) {
      hit = for_each_subset(all.without(x0), k, [&](VertexSet rest) {
        VertexSet v1 = rest.with(x0);
        if (!g.is_clique(v1)) return false;
        VertexSet v2 = (all - v1).with(x0);
        return try_witness(ClassWitness{GraphClass::G3, v1, v2, x0, std::nullopt, k});
      });
    }
    if (hit && !report_all) return found;

    // G5: V2 of size k+2 spanning at most one edge.
    for_each_subset(all, k + 2, [&](VertexSet v2) {
      std::size_t inside = g.edges_inside(v2);
      if (inside > 1) return false;
      std::optional<VertexPair> e0;
      if (inside == 1) e0 = sole_edge_inside(g, v2);
      return try_witness(ClassWitness{GraphClass::G5, all - v2, v2, std::nullopt, e0, k});
    });
  } else if (n == 2 * k + 1) {
    // G2: two (k+1)-cliques sharing x0; V1 holds the smallest other vertex.
    bool hit = false;
    for (int x0 = 0; x0 < n && !hit; ++x0) {
      VertexSet others = all.without(x0);
      int anchor = others.lowest();
      hit = for_each_subset(others.without(anchor), k - 1, [&](VertexSet rest) {
        VertexSet v1 = rest.with(anchor).with(x0);
        if (!g.is_clique(v1)) return false;
        VertexSet v2 = (all - v1).with(x0);
        return try_witness(ClassWitness{GraphClass::G2, v1, v2, x0, std::nullopt, k});
      });
    }
    if (hit && !report_all) return found;

    // G4: independent V2 of size k+1 completely joined to V1.
    for_each_subset(all, k + 1, [&](VertexSet v2) {
      if (!g.is_independent(v2)) return false;
      return try_witness(ClassWitness{GraphClass::G4, all - v2, v2, std::nullopt, std::nullopt, k});
    });
  }
  return found;
}

ClassifyResult classify_dense_nonhamiltonian(const Graph& g, int k, bool report_all,
                                             DegreeScope g3_scope) {
  ClassifyResult result;
  const int n = g.vertex_count();
  if (k < 3) {
    result.not_applicable = "k must be >= 3";
  } else if (n != 2 * k + 1 && n != 2 * k + 2) {
    result.not_applicable = "n must be 2k+1 or 2k+2";
  } else if (g.min_degree() < k) {
    result.not_applicable = "minimum degree " + std::to_string(g.min_degree()) + " < k";
  } else if (is_hamiltonian(g)) {
    result.not_applicable = "graph is hamiltonian";
  }
  if (!result.applicable()) return result;
  result.witnesses = match_classes(g, k, report_all, g3_scope);
  return result;
}

// ---------------------------------------------------------------------------

namespace {

bool joins(const VertexPair& p, VertexSet a, VertexSet b) {
  return (a.contains(p.u) && b.contains(p.v)) || (a.contains(p.v) && b.contains(p.u));
}

bool inside(const VertexPair& p, VertexSet s) { return s.contains(p.u) && s.contains(p.v); }

}  // namespace

std::string swap_plan_shape_error(const Graph& g, const ClassWitness& w, const SwapPlan& plan) {
  const int n = g.vertex_count();
  auto valid_pair = [&](const VertexPair& p) {
    return p.u >= 0 && p.v < n && p.u != p.v;
  };
  for (std::size_t i = 0; i < plan.removed.size(); ++i) {
    const auto& p = plan.removed[i];
    if (!valid_pair(p) || !g.has_edge(p)) return "removed pair is not an edge of G";
    for (std::size_t j = 0; j < i; ++j)
      if (plan.removed[j] == p) return "removed pairs must be distinct";
  }
  for (std::size_t i = 0; i < plan.added.size(); ++i) {
    const auto& p = plan.added[i];
    if (!valid_pair(p)) return "added pair is invalid";
    if (g.has_edge(p)) return "added pair is already an edge of G";
    for (std::size_t j = 0; j < i; ++j)
      if (plan.added[j] == p) return "added pairs must be distinct";
  }
  const std::size_t max_removed =
      (w.cls == GraphClass::G1 || w.cls == GraphClass::G5) ? 2 : 1;
  if (plan.removed.size() > max_removed) return "too many removed edges for the class";

  const VertexSet x0 = w.x0 ? VertexSet::single(*w.x0) : VertexSet{};
  switch (w.cls) {
    case GraphClass::G1:
      if (plan.added.size() != 2) return "G1 needs two added pairs";
      for (const auto& p : plan.added)
        if (!joins(p, w.v1, w.v2)) return "G1 added pairs must join V1 and V2";
      if (plan.added[0].as_set().intersects(plan.added[1].as_set()))
        return "G1 added pairs must be disjoint";
      return {};
    case GraphClass::G2:
    case GraphClass::G3:
      if (plan.added.size() != 1) return "G2/G3 need one added pair";
      if (!joins(plan.added[0], w.v1 - x0, w.v2 - x0))
        return "added pair must join V1\\{x0} and V2\\{x0}";
      return {};
    case GraphClass::G4:
      if (plan.added.size() != 1) return "G4 needs one added pair";
      if (!inside(plan.added[0], w.v2)) return "G4 added pair must lie inside V2";
      return {};
    case GraphClass::G5:
      if (plan.added.size() != 2) return "G5 needs two added pairs";
      for (const auto& p : plan.added)
        if (!inside(p, w.v2)) return "G5 added pairs must lie inside V2";
      return {};
  }
  return "unknown class";
}

bool is_exceptional_swap(const Graph& g, const ClassWitness& w, const SwapPlan& plan) {
  if (w.cls != GraphClass::G3 || !w.x0) return false;
  if (plan.removed.size() != 1 || plan.added.size() != 1) return false;
  const int x0 = *w.x0;
  VertexSet nbrs = g.neighbors(x0) & w.v2.without(x0);
  if (nbrs.size() != 2) return false;
  const VertexPair& b = plan.added[0];
  int x2 = w.v2.contains(b.u) ? b.u : b.v;
  if (!nbrs.contains(x2)) return false;
  int y2 = nbrs.without(x2).lowest();
  if (plan.removed[0] != VertexPair(x0, y2)) return false;
  VertexSet rest = w.v2.without(x0);
  std::size_t full = static_cast<std::size_t>(rest.size()) * (rest.size() - 1) / 2;
  std::size_t have = g.edges_inside(rest);
  if (have == full) return true;
  return have + 1 == full && !g.has_edge(x2, y2);
}

SwapResult apply_swap(const Graph& g, const ClassWitness& w, const SwapPlan& plan) {
  if (w.k < 6) fail(ErrorCode::precondition, "edge swap guarantee needs k >= 6");
  if (!satisfies_class(g, w))
    fail(ErrorCode::precondition, std::string("graph does not satisfy class ") + to_string(w.cls));
  if (auto err = swap_plan_shape_error(g, w, plan); !err.empty())
    fail(ErrorCode::invalid_argument, "swap plan shape mismatch: " + err);
  SwapResult result{g, SwapGuarantee::hamiltonian};
  for (const auto& p : plan.removed) result.graph.remove_edge(p);
  for (const auto& p : plan.added) result.graph.add_edge(p);
  if (is_exceptional_swap(g, w, plan)) result.guarantee = SwapGuarantee::exceptional;
  return result;
}

}  // namespace berge
