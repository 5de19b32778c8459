#include "berge/reduction.hpp"

#include <algorithm>

namespace berge {

IncidenceBipartite IncidenceBipartite::from_lists(std::size_t left_count, std::size_t right_count,
                                                  const std::vector<std::pair<int, int>>& links) {
  IncidenceBipartite b;
  b.left_count = left_count;
  b.right_count = right_count;
  b.left_adj.assign(left_count, {});
  b.right_adj.assign(right_count, {});
  for (auto [l, r] : links) {
    if (l < 0 || r < 0 || static_cast<std::size_t>(l) >= left_count ||
        static_cast<std::size_t>(r) >= right_count)
      fail(ErrorCode::invalid_argument, "bipartite link out of range");
    b.left_adj[l].push_back(r);
    b.right_adj[r].push_back(l);
  }
  for (auto& a : b.left_adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  for (auto& a : b.right_adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return b;
}

bool IncidenceBipartite::adjacent(int l, int r) const {
  const auto& a = left_adj[l];
  return std::binary_search(a.begin(), a.end(), r);
}

int IncidenceBipartite::pair_index(VertexPair p) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) return -1;
  return static_cast<int>(it - pairs.begin());
}

IncidenceBipartite build_incidence(const Hypergraph& h) {
  const int n = h.vertex_count();
  IncidenceBipartite b;
  b.vertex_count = n;
  b.hyperedges.assign(h.edges().begin(), h.edges().end());
  b.pairs = shadow2(h).edges();
  b.left_count = b.hyperedges.size();
  b.right_count = b.pairs.size();
  b.left_adj.assign(b.left_count, {});
  b.right_adj.assign(b.right_count, {});

  std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t j = 0; j < b.pairs.size(); ++j)
    index[b.pairs[j].u * n + b.pairs[j].v] = static_cast<int>(j);

  for (std::size_t i = 0; i < b.hyperedges.size(); ++i) {
    std::vector<int> members = b.hyperedges[i].members();
    auto& adj = b.left_adj[i];
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y)
        adj.push_back(index[members[x] * n + members[y]]);
    std::sort(adj.begin(), adj.end());
    for (int r : adj) b.right_adj[r].push_back(static_cast<int>(i));
  }
  return b;
}

BipartiteMatching BipartiteMatching::empty(const IncidenceBipartite& b) {
  return BipartiteMatching{std::vector<int>(b.left_count, -1), std::vector<int>(b.right_count, -1)};
}

std::size_t BipartiteMatching::size() const {
  return static_cast<std::size_t>(std::count_if(left_mate.begin(), left_mate.end(),
                                                [](int r) { return r >= 0; }));
}

void BipartiteMatching::link(int l, int r) {
  if (left_mate[l] >= 0) right_mate[left_mate[l]] = -1;
  if (right_mate[r] >= 0) left_mate[right_mate[r]] = -1;
  left_mate[l] = r;
  right_mate[r] = l;
}

void BipartiteMatching::unlink_left(int l) {
  if (left_mate[l] >= 0) right_mate[left_mate[l]] = -1;
  left_mate[l] = -1;
}

bool is_matching_of(const IncidenceBipartite& b, const BipartiteMatching& m) {
  if (m.left_mate.size() != b.left_count || m.right_mate.size() != b.right_count) return false;
  for (std::size_t l = 0; l < b.left_count; ++l) {
    int r = m.left_mate[l];
    if (r < 0) continue;
    if (static_cast<std::size_t>(r) >= b.right_count) return false;
    if (m.right_mate[r] != static_cast<int>(l)) return false;
    if (!b.adjacent(static_cast<int>(l), r)) return false;
  }
  for (std::size_t r = 0; r < b.right_count; ++r) {
    int l = m.right_mate[r];
    if (l < 0) continue;
    if (static_cast<std::size_t>(l) >= b.left_count || m.left_mate[l] != static_cast<int>(r))
      return false;
  }
  return true;
}

bool has_augmenting_path(const IncidenceBipartite& b, const BipartiteMatching& m) {
  std::vector<char> seen_right(b.right_count, 0);
  std::vector<int> queue;
  for (std::size_t l = 0; l < b.left_count; ++l)
    if (m.left_mate[l] < 0) queue.push_back(static_cast<int>(l));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int l = queue[head];
    for (int r : b.left_adj[l]) {
      if (seen_right[r] || m.left_mate[l] == r) continue;
      seen_right[r] = 1;
      if (m.right_mate[r] < 0) return true;
      queue.push_back(m.right_mate[r]);
    }
  }
  return false;
}

namespace {

class Kuhn {
 public:
  Kuhn(const IncidenceBipartite& b, BipartiteMatching& m)
      : b_(b), m_(m), visited_(b.right_count, 0) {}

  bool augment(int l) {
    for (int r : b_.left_adj[l]) {
      if (m_.right_mate[r] < 0) {
        m_.link(l, r);
        return true;
      }
    }
    for (int r : b_.left_adj[l]) {
      if (visited_[r]) continue;
      visited_[r] = 1;
      int other = m_.right_mate[r];
      if (augment(other)) {
        m_.link(l, r);
        return true;
      }
    }
    return false;
  }

  // Marks stay valid across failed searches; a success invalidates them.
  void reset() { std::fill(visited_.begin(), visited_.end(), 0); }

 private:
  const IncidenceBipartite& b_;
  BipartiteMatching& m_;
  std::vector<char> visited_;
};

}  // namespace

BipartiteMatching maximum_matching(const IncidenceBipartite& b) {
  BipartiteMatching m = BipartiteMatching::empty(b);
  Kuhn kuhn(b, m);
  std::size_t matched = 0;
  for (std::size_t l = 0; l < b.left_count && matched < b.right_count; ++l) {
    if (b.left_adj[l].empty()) continue;
    if (kuhn.augment(static_cast<int>(l))) {
      ++matched;
      kuhn.reset();
    }
  }
  return m;
}

std::size_t prefer_two_element_edges(const IncidenceBipartite& b, BipartiteMatching& m) {
  std::size_t swaps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t l = 0; l < b.hyperedges.size(); ++l) {
      VertexSet e = b.hyperedges[l];
      if (e.size() != 2) continue;
      int r = b.pair_index(VertexPair(e.lowest(), e.without(e.lowest()).lowest()));
      if (r < 0 || m.left_mate[l] == r) continue;
      m.link(static_cast<int>(l), r);
      ++swaps;
      changed = true;
    }
  }
  return swaps;
}

void check_reduction_invariants(const IncidenceBipartite& b, const BipartiteMatching& m) {
  Graph g(b.vertex_count);
  for (std::size_t r = 0; r < b.right_count; ++r)
    if (m.right_mate[r] >= 0) g.add_edge(b.pairs[r]);

  std::vector<char> covered(b.right_count, 0);
  for (std::size_t l = 0; l < b.left_count; ++l) {
    VertexSet e = b.hyperedges[l];
    if (m.left_mate[l] >= 0) {
      for (int r : b.left_adj[l]) covered[r] = 1;
      continue;
    }
    if (e.size() == 2)
      fail(ErrorCode::theorem_violation, "2-element hyperedge " + e.to_string() + " is unmatched");
    if (!g.is_clique(e))
      fail(ErrorCode::theorem_violation,
           "unmatched hyperedge " + e.to_string() + " does not span a clique of G");
  }
  for (std::size_t r = 0; r < b.right_count; ++r)
    if (!covered[r])
      fail(ErrorCode::theorem_violation, "shadow pair not covered by matched hyperedges");
}

BipartiteMatching matching_exchange(const IncidenceBipartite& b, const BipartiteMatching& m1,
                                    const BipartiteMatching& m2) {
  if (!is_matching_of(b, m1) || !is_matching_of(b, m2))
    fail(ErrorCode::precondition, "matching_exchange needs two matchings of the graph");
  for (std::size_t r = 0; r < b.right_count; ++r)
    if (m2.right_mate[r] >= 0 && m1.right_mate[r] < 0)
      fail(ErrorCode::precondition, "range of the second matching must lie in the first's");

  BipartiteMatching m3 = m1;
  for (std::size_t x = 0; x < b.left_count; ++x) {
    if (m2.left_mate[x] < 0 || m3.left_mate[x] >= 0) continue;
    // Walk x0 -m2- y0 -m3- x1 -m2- y1 ... until some x_t outside domain(m2).
    std::vector<int> xs{static_cast<int>(x)};
    while (true) {
      int y = m2.left_mate[xs.back()];
      int next = m3.right_mate[y];
      xs.push_back(next);
      if (m2.left_mate[next] < 0) break;
    }
    m3.unlink_left(xs.back());
    for (std::size_t i = xs.size() - 1; i-- > 0;) m3.link(xs[i], m2.left_mate[xs[i]]);
  }
  return m3;
}

// ---------------------------------------------------------------------------

MatchingMap::MatchingMap(std::vector<MatchedEdge> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const MatchedEdge& a, const MatchedEdge& b) {
    return canonical_less(a.edge, b.edge);
  });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].edge == entries_[i - 1].edge)
      fail(ErrorCode::invalid_argument, "matching map lists a hyperedge twice");
}

MatchingMap MatchingMap::from_matching(const IncidenceBipartite& b, const BipartiteMatching& m) {
  std::vector<MatchedEdge> entries;
  for (std::size_t l = 0; l < b.left_count; ++l)
    if (m.left_mate[l] >= 0) entries.push_back({b.hyperedges[l], b.pairs[m.left_mate[l]]});
  return MatchingMap(std::move(entries));
}

BipartiteMatching MatchingMap::to_matching(const IncidenceBipartite& b) const {
  BipartiteMatching m = BipartiteMatching::empty(b);
  for (const auto& entry : entries_) {
    auto it = std::lower_bound(b.hyperedges.begin(), b.hyperedges.end(), entry.edge, CanonicalLess{});
    int r = b.pair_index(entry.pair);
    if (it == b.hyperedges.end() || *it != entry.edge || r < 0)
      fail(ErrorCode::invalid_argument, "matching map entry is not in the incidence graph");
    m.link(static_cast<int>(it - b.hyperedges.begin()), r);
  }
  return m;
}

std::optional<VertexPair> MatchingMap::image(VertexSet edge) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), edge,
                             [](const MatchedEdge& a, VertexSet e) { return canonical_less(a.edge, e); });
  if (it == entries_.end() || it->edge != edge) return std::nullopt;
  return it->pair;
}

std::optional<VertexSet> MatchingMap::preimage(VertexPair pair) const {
  for (const auto& entry : entries_)
    if (entry.pair == pair) return entry.edge;
  return std::nullopt;
}

void MatchingMap::reassign(VertexSet edge, VertexPair pair) {
  if (!edge.contains_all(pair.as_set()))
    fail(ErrorCode::invalid_argument, "reassigned pair is not inside its hyperedge");
  for (const auto& entry : entries_)
    if (entry.pair == pair && entry.edge != edge)
      fail(ErrorCode::invalid_argument, "pair is already the image of another hyperedge");
  for (auto& entry : entries_)
    if (entry.edge == edge) {
      entry.pair = pair;
      return;
    }
  entries_.push_back({edge, pair});
  *this = MatchingMap(std::move(entries_));
}

bool is_valid_matching_map(const Hypergraph& h, const MatchingMap& phi) {
  std::vector<VertexPair> seen;
  for (const auto& entry : phi.entries()) {
    if (!h.contains_edge(entry.edge)) return false;
    if (entry.pair.u == entry.pair.v || !entry.edge.contains_all(entry.pair.as_set())) return false;
    seen.push_back(entry.pair);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

ReductionResult reduce(const Hypergraph& h) {
  ReductionResult result;
  result.incidence = build_incidence(h);
  result.matching = maximum_matching(result.incidence);
  prefer_two_element_edges(result.incidence, result.matching);
  if (!is_matching_of(result.incidence, result.matching))
    fail(ErrorCode::theorem_violation, "matcher produced an invalid matching");
  if (has_augmenting_path(result.incidence, result.matching))
    fail(ErrorCode::theorem_violation, "matching is not maximum");
  check_reduction_invariants(result.incidence, result.matching);
  result.phi = MatchingMap::from_matching(result.incidence, result.matching);
  return result;
}

MatchingMap max_matching_prefer2(const Hypergraph& h) { return reduce(h).phi; }

Graph extract_berge_subgraph(const Hypergraph& h, const MatchingMap& phi) {
  Graph g(h.vertex_count());
  for (const auto& entry : phi.entries()) g.add_edge(entry.pair);
  return g;
}

BergeCertificate lift_cycle(const MatchingMap& phi, const std::vector<int>& cycle) {
  BergeCertificate cert{CertificateKind::cycle, cycle, {}};
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    VertexPair p(cycle[i], cycle[(i + 1) % cycle.size()]);
    auto edge = phi.preimage(p);
    if (!edge)
      fail(ErrorCode::theorem_violation,
           "cycle pair {" + std::to_string(p.u) + "," + std::to_string(p.v) + "} has no preimage");
    cert.edges.push_back(*edge);
  }
  return cert;
}

}  // namespace berge
