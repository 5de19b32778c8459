#pragma once

// Hyperedge / shadow-pair incidence graph, maximum matchings that keep every
// 2-element hyperedge on its own pair, matching exchange, and the Berge
// subgraph a matching induces.

#include <cstddef>
#include <optional>
#include <vector>

#include "berge/hypercore.hpp"

namespace berge {

/// Bipartite graph with left nodes 0..left_count-1 and right nodes
/// 0..right_count-1. When built from a hypergraph, left node i is edge(i) and
/// right node j is pairs[j].
struct IncidenceBipartite {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<std::vector<int>> left_adj;   // sorted right indices
  std::vector<std::vector<int>> right_adj;  // sorted left indices

  int vertex_count = 0;
  std::vector<VertexSet> hyperedges;
  std::vector<VertexPair> pairs;

  static IncidenceBipartite from_lists(std::size_t left_count, std::size_t right_count,
                                       const std::vector<std::pair<int, int>>& links);

  bool adjacent(int l, int r) const;
  /// Index of the pair in `pairs`, or -1.
  int pair_index(VertexPair p) const;
};

IncidenceBipartite build_incidence(const Hypergraph& h);

/// A matching by index; -1 marks an unmatched node.
struct BipartiteMatching {
  std::vector<int> left_mate;
  std::vector<int> right_mate;

  static BipartiteMatching empty(const IncidenceBipartite& b);
  std::size_t size() const;
  void link(int l, int r);
  void unlink_left(int l);

  friend bool operator==(const BipartiteMatching&, const BipartiteMatching&) = default;
};

bool is_matching_of(const IncidenceBipartite& b, const BipartiteMatching& m);
bool has_augmenting_path(const IncidenceBipartite& b, const BipartiteMatching& m);

/// Maximum matching; left nodes are tried in index order, which for
/// hypergraph incidences is the canonical edge order.
BipartiteMatching maximum_matching(const IncidenceBipartite& b);

/// Reassigns each shadow pair xy to the hyperedge {x,y} when that hyperedge
/// exists but is unmatched, until nothing changes. Returns swaps made.
std::size_t prefer_two_element_edges(const IncidenceBipartite& b, BipartiteMatching& m);

/// Throws theorem_violation unless: every 2-element hyperedge is matched, the
/// matched hyperedges cover every shadow pair, and every unmatched hyperedge
/// spans a clique of the matched pairs.
void check_reduction_invariants(const IncidenceBipartite& b, const BipartiteMatching& m);

/// Given matchings m1, m2 with range(m2) inside range(m1), a matching m3
/// inside m1 u m2 with range(m3) = range(m1) and domain(m3) containing
/// domain(m2).
BipartiteMatching matching_exchange(const IncidenceBipartite& b, const BipartiteMatching& m1,
                                    const BipartiteMatching& m2);

// ---------------------------------------------------------------------------

struct MatchedEdge {
  VertexSet edge;
  VertexPair pair;

  friend bool operator==(const MatchedEdge&, const MatchedEdge&) = default;
};

/// Partial injection phi from hyperedges to shadow pairs, phi(m) inside m.
/// Entries are kept in canonical hyperedge order.
class MatchingMap {
 public:
  MatchingMap() = default;
  explicit MatchingMap(std::vector<MatchedEdge> entries);

  static MatchingMap from_matching(const IncidenceBipartite& b, const BipartiteMatching& m);
  BipartiteMatching to_matching(const IncidenceBipartite& b) const;

  const std::vector<MatchedEdge>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::optional<VertexPair> image(VertexSet edge) const;
  std::optional<VertexSet> preimage(VertexPair pair) const;
  bool in_domain(VertexSet edge) const { return image(edge).has_value(); }

  /// phi(edge) := pair. The pair must not be the image of another edge.
  void reassign(VertexSet edge, VertexPair pair);

  friend bool operator==(const MatchingMap&, const MatchingMap&) = default;

 private:
  std::vector<MatchedEdge> entries_;
};

/// Injective with phi(m) inside m and every m an edge of h.
bool is_valid_matching_map(const Hypergraph& h, const MatchingMap& phi);

struct ReductionResult {
  IncidenceBipartite incidence;
  BipartiteMatching matching;
  MatchingMap phi;
};

/// Maximum matching of the incidence graph holding every 2-element hyperedge;
/// asserts the structural properties above and maximality before returning.
ReductionResult reduce(const Hypergraph& h);
MatchingMap max_matching_prefer2(const Hypergraph& h);

Graph extract_berge_subgraph(const Hypergraph& h, const MatchingMap& phi);

/// Replaces each edge of a graph cycle by its phi-preimage.
BergeCertificate lift_cycle(const MatchingMap& phi, const std::vector<int>& cycle);

}  // namespace berge
