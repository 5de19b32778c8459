#pragma once

// Core data model: vertex sets as 64-bit masks, simple hypergraphs, simple
// graphs and Berge path/cycle certificates.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "berge/error.hpp"

namespace berge {

inline constexpr int kMaxVertices = 64;

/// A set of vertices from [0, 64) stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> members);
  static VertexSet of(std::span<const int> members);
  /// Vertices lo, lo+1, ..., hi-1.
  static constexpr VertexSet range(int lo, int hi) {
    if (hi <= lo) return VertexSet{};
    std::uint64_t upper = hi >= 64 ? ~0ULL : ((1ULL << hi) - 1);
    std::uint64_t lower = (1ULL << lo) - 1;
    return VertexSet{upper & ~lower};
  }
  static constexpr VertexSet single(int v) { return VertexSet{1ULL << v}; }
  static constexpr VertexSet pair(int u, int v) {
    return VertexSet{(1ULL << u) | (1ULL << v)};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1ULL; }
  constexpr bool contains_all(VertexSet other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr VertexSet with(int v) const { return VertexSet{bits_ | (1ULL << v)}; }
  constexpr VertexSet without(int v) const {
    return VertexSet{bits_ & ~(1ULL << v)};
  }

  std::vector<int> members() const;
  std::string to_string() const;  // "{0,1,2}"

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet{a.bits_ | b.bits_};
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet{a.bits_ & b.bits_};
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet{a.bits_ & ~b.bits_};
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Bits strictly above position v.
constexpr std::uint64_t bits_above(int v) {
  return v >= 63 ? 0 : (~0ULL << (v + 1));
}

/// Canonical edge order: by size, then lexicographically on the sorted member
/// lists.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const {
    return canonical_less(a, b);
  }
};

/// Unordered pair {u, v} with u < v.
struct VertexPair {
  int u = 0;
  int v = 0;

  VertexPair() = default;
  VertexPair(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  VertexSet as_set() const { return VertexSet::pair(u, v); }
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Simple hypergraph: distinct vertex subsets of [0, n), kept in canonical
/// order. The empty edge and singletons are storable.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<VertexSet> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const VertexSet> edges() const { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }
  VertexSet all_vertices() const { return VertexSet::range(0, n_); }

  bool contains_edge(VertexSet e) const;
  /// Position of e in canonical order, or -1.
  long index_of(VertexSet e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// Simple undirected graph with adjacency rows as bitmasks.
class Graph {
 public:
  explicit Graph(int n = 0);
  Graph(int n, std::span<const VertexPair> edges);

  int vertex_count() const { return n_; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1ULL; }
  bool has_edge(VertexPair p) const { return has_edge(p.u, p.v); }
  VertexSet neighbors(int v) const { return VertexSet{adj_[v]}; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int min_degree() const;
  std::size_t edge_count() const;
  std::vector<VertexPair> edges() const;

  void add_edge(int u, int v);
  void add_edge(VertexPair p) { add_edge(p.u, p.v); }
  void remove_edge(int u, int v);
  void remove_edge(VertexPair p) { remove_edge(p.u, p.v); }

  /// Subgraph induced on the given vertex set (same vertex numbering).
  Graph induced(VertexSet keep) const;
  /// True when the induced subgraph on s has every pair as an edge.
  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;
  std::size_t edges_inside(VertexSet s) const;
  std::size_t edges_between(VertexSet a, VertexSet b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

enum class CertificateKind { path, cycle };

/// Alternating sequence of representative vertices and hyperedges.
/// For a path, vertices.size() == edges.size() + 1 and edges[i] joins
/// vertices[i], vertices[i+1]; for a cycle the sizes agree and the last edge
/// closes back to vertices[0].
struct BergeCertificate {
  CertificateKind kind = CertificateKind::path;
  std::vector<int> vertices;
  std::vector<VertexSet> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const BergeCertificate&,
                         const BergeCertificate&) = default;
};

enum class CertificateFault {
  none,
  malformed_length,
  cycle_too_short,
  vertex_out_of_range,
  duplicate_vertex,
  duplicate_edge,
  edge_not_in_hypergraph,
  pair_not_contained,
};

const char* to_string(CertificateFault fault) noexcept;

struct CertificateCheck {
  CertificateFault fault = CertificateFault::none;
  std::size_t position = 0;  // index of the offending vertex/edge

  bool accepted() const { return fault == CertificateFault::none; }
  explicit operator bool() const { return accepted(); }
};

Graph shadow2(const Hypergraph& h);
std::size_t degree(const Hypergraph& h, int v);
std::vector<std::size_t> degrees(const Hypergraph& h);
/// Minimum degree over all vertices; 0 for n == 0.
std::size_t min_degree(const Hypergraph& h);
Hypergraph down_close(const Hypergraph& h);
bool is_downset(const Hypergraph& h);
CertificateCheck verify_certificate(const Hypergraph& h,
                                    const BergeCertificate& c);

/// Complete hypergraph on the given vertex set: all of its subsets, or only
/// those of size >= min_size.
std::vector<VertexSet> all_subsets(VertexSet ground, int min_size = 0);

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace berge
