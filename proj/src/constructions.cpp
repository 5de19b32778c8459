#include "berge/constructions.hpp"

#include <algorithm>

#include "berge/graph_ham.hpp"

namespace berge {

const char* to_string(ObstructionKind k) noexcept {
  switch (k) {
    case ObstructionKind::cut_vertex: return "cut-vertex";
    case ObstructionKind::cut_edge: return "cut-edge";
    case ObstructionKind::cross_pair_scarcity: return "cross-pair-scarcity";
    case ObstructionKind::component_size: return "component-size";
    case ObstructionKind::shadow_block_structure: return "shadow-block-structure";
  }
  return "?";
}

const char* to_string(BlockShape s) noexcept { return s == BlockShape::path ? "path" : "star"; }

namespace {

std::vector<VertexSet> components(const Graph& g, VertexSet vertices) {
  std::vector<VertexSet> out;
  VertexSet left = vertices;
  while (!left.empty()) {
    VertexSet seen = VertexSet::single(left.lowest());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier.members()) next = next | (g.neighbors(v) & vertices);
      frontier = next - seen;
      seen = seen | next;
    }
    out.push_back(seen);
    left = left - seen;
  }
  return out;
}

Hypergraph without_edge(const Hypergraph& h, VertexSet e) {
  std::vector<VertexSet> rest;
  for (VertexSet f : h.edges())
    if (f != e) rest.push_back(f);
  return Hypergraph(h.vertex_count(), std::move(rest));
}

void add_all_subsets(std::vector<VertexSet>& out, VertexSet ground, int min_size) {
  for (VertexSet s : all_subsets(ground, min_size)) out.push_back(s);
}

std::vector<VertexSet> dedup(std::vector<VertexSet> edges) {
  std::sort(edges.begin(), edges.end(), CanonicalLess{});
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

std::string check_obstruction(const Hypergraph& h, const ObstructionCert& cert) {
  const int n = h.vertex_count();
  const VertexSet all = h.all_vertices();
  switch (cert.kind) {
    case ObstructionKind::cut_vertex: {
      if (!cert.vertex || *cert.vertex < 0 || *cert.vertex >= n) return "cut vertex missing";
      VertexSet rest = all.without(*cert.vertex);
      if (components(shadow2(h), rest).size() < 2) return "shadow stays connected without the vertex";
      return {};
    }
    case ObstructionKind::cut_edge: {
      if (!cert.edge || !h.contains_edge(*cert.edge)) return "cut edge is not an edge";
      if (components(shadow2(without_edge(h, *cert.edge)), all).size() < 2)
        return "shadow stays connected without the edge";
      return {};
    }
    case ObstructionKind::cross_pair_scarcity: {
      std::size_t count = 0;
      for (VertexSet e : h.edges())
        if ((e & cert.set).size() >= 2) ++count;
      if (count > cert.bound) return "more hyperedges meet the set in two vertices than stated";
      const int forced = 2 * cert.set.size() - n;
      if (forced <= static_cast<int>(cert.bound)) return "bound does not fall short of the forced pairs";
      return {};
    }
    case ObstructionKind::component_size: {
      for (VertexSet c : components(shadow2(h), all))
        if (static_cast<std::size_t>(c.size()) > cert.bound) return "a shadow component is too large";
      return {};
    }
    case ObstructionKind::shadow_block_structure: {
      if (has_cycle_at_least(shadow2(h), static_cast<int>(cert.bound) + 1))
        return "the shadow has a longer cycle";
      return {};
    }
  }
  return "unknown obstruction";
}

Construction dirac_sharpness(int n, int variant) {
  if (n < 5 || n > 30) fail(ErrorCode::invalid_argument, "dirac sharpness needs 5 <= n <= 30");
  const bool odd = n % 2 == 1;
  const VertexSet all = VertexSet::range(0, n);
  std::vector<VertexSet> edges;
  ObstructionCert cert;
  switch (variant) {
    case 1: {
      if (!odd) fail(ErrorCode::invalid_argument, "variant 1 needs odd n");
      const int x = (n - 1) / 2;
      add_all_subsets(edges, VertexSet::range(0, x + 1), 0);
      add_all_subsets(edges, VertexSet::range(x, n), 0);
      cert.kind = ObstructionKind::cut_vertex;
      cert.vertex = x;
      break;
    }
    case 2: {
      if (odd) fail(ErrorCode::invalid_argument, "variant 2 needs even n");
      add_all_subsets(edges, VertexSet::range(0, n / 2), 0);
      add_all_subsets(edges, VertexSet::range(n / 2, n), 0);
      edges.push_back(all);
      cert.kind = ObstructionKind::cut_edge;
      cert.edge = all;
      break;
    }
    case 3:
    case 4: {
      if (odd != (variant == 3))
        fail(ErrorCode::invalid_argument, variant == 3 ? "variant 3 needs odd n" : "variant 4 needs even n");
      const int s = variant == 3 ? (n + 1) / 2 : n / 2 + 1;
      const VertexSet crit = VertexSet::range(0, s);
      const VertexSet rest = all - crit;
      for (VertexSet t : all_subsets(rest, 0)) {
        edges.push_back(t);
        for (int v = 0; v < s; ++v) edges.push_back(t.with(v));
      }
      if (variant == 4) edges.push_back(all);
      cert.kind = ObstructionKind::cross_pair_scarcity;
      cert.set = crit;
      cert.bound = variant == 3 ? 0 : 1;
      break;
    }
    default:
      fail(ErrorCode::invalid_argument, "variant must be 1, 2, 3 or 4");
  }
  return {Hypergraph(n, dedup(std::move(edges))), cert};
}

Construction path_sharpness(int n, int k) {
  if (k < 2 || n < 1 || n % (k - 1) != 0)
    fail(ErrorCode::invalid_argument, "path sharpness needs k >= 2 and (k-1) | n");
  if (n > kMaxVertices) fail(ErrorCode::invalid_argument, "n too large");
  std::vector<VertexSet> edges;
  for (int start = 0; start < n; start += k - 1)
    add_all_subsets(edges, VertexSet::range(start, start + k - 1), 1);
  ObstructionCert cert;
  cert.kind = ObstructionKind::component_size;
  cert.bound = static_cast<std::size_t>(k - 1);
  return {Hypergraph(n, dedup(std::move(edges))), cert};
}

Construction cycle_sharpness(int n, int k, int variant) {
  if (k < 3) fail(ErrorCode::invalid_argument, "cycle sharpness needs k >= 3");
  if (n > kMaxVertices) fail(ErrorCode::invalid_argument, "n too large");
  std::vector<VertexSet> edges;
  if (variant == 1) {
    if (n % (k - 1) != 0 || n / (k - 1) < 2)
      fail(ErrorCode::invalid_argument, "variant 1 needs (k-1) | n with at least two blocks");
    Construction base = path_sharpness(n, k);
    edges.assign(base.h.edges().begin(), base.h.edges().end());
    edges.push_back(VertexSet::range(0, n));
    ObstructionCert cert;
    cert.kind = ObstructionKind::cut_edge;
    cert.edge = VertexSet::range(0, n);
    return {Hypergraph(n, dedup(std::move(edges))), cert};
  }
  if (variant != 2) fail(ErrorCode::invalid_argument, "variant must be 1 or 2");
  const std::int64_t need = (std::int64_t{1} << (k - 2)) + 1;
  if ((n - 1) % (k - 1) != 0 || (n - 1) / (k - 1) < need)
    fail(ErrorCode::invalid_argument,
         "variant 2 needs n = 1 mod (k-1) and n > (k-1)(2^(k-2)+1)");
  const int x = n - 1;
  for (int start = 0; start < x; start += k - 1) {
    VertexSet block = VertexSet::range(start, start + k - 1);
    add_all_subsets(edges, block, 1);
    edges.push_back(block.with(x));
  }
  ObstructionCert cert;
  cert.kind = ObstructionKind::cut_vertex;
  cert.vertex = x;
  return {Hypergraph(n, dedup(std::move(edges))), cert};
}

Construction eg_sharpness(int n, int k) {
  if (k < 3 || n < k || (n - 1) % (k - 2) != 0)
    fail(ErrorCode::invalid_argument, "eg sharpness needs n >= k >= 3 and n = 1 mod (k-2)");
  if (n > kMaxVertices) fail(ErrorCode::invalid_argument, "n too large");
  const int x = n - 1;
  std::vector<VertexSet> edges;
  for (int start = 0; start < x; start += k - 2)
    for (VertexSet s : all_subsets(VertexSet::range(start, start + k - 2), 0)) {
      edges.push_back(s);
      edges.push_back(s.with(x));
    }
  ObstructionCert cert;
  cert.kind = ObstructionKind::shadow_block_structure;
  cert.bound = static_cast<std::size_t>(k - 1);
  return {Hypergraph(n, dedup(std::move(edges))), cert};
}

Graph fnk(int n, int k, BlockShape shape) {
  if (k < 3 || n < k - 1 || (n - 1) % (k - 2) != 0)
    fail(ErrorCode::invalid_argument, "fnk needs k >= 3, n >= k-1 and n = 1 mod (k-2)");
  if (n > kMaxVertices) fail(ErrorCode::invalid_argument, "n too large");
  Graph g(n);
  const int blocks = (n - 1) / (k - 2);
  for (int b = 0; b < blocks; ++b) {
    VertexSet block;
    if (shape == BlockShape::path) {
      block = VertexSet::range(b * (k - 2), b * (k - 2) + k - 1);
    } else {
      block = VertexSet::range(b * (k - 2), (b + 1) * (k - 2)).with(n - 1);
    }
    std::vector<int> vs = block.members();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
  }
  return g;
}

}  // namespace berge
