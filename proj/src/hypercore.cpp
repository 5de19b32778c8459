#include "berge/hypercore.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace berge {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::invalid_vertex: return "invalid_vertex";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::guardrail: return "guardrail";
    case ErrorCode::theorem_violation: return "theorem_violation";
  }
  return "unknown";
}

VertexSet VertexSet::of(std::initializer_list<int> members) {
  return of(std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::span<const int> members) {
  std::uint64_t bits = 0;
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices)
      fail(ErrorCode::invalid_vertex, "vertex " + std::to_string(v) + " outside [0,64)");
    bits |= 1ULL << v;
  }
  return VertexSet{bits};
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

// --- Hypergraph ------------------------------------------------------------

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices)
    fail(ErrorCode::invalid_argument,
         "vertex count " + std::to_string(n) + " outside [0,64]");
  VertexSet ground = all_vertices();
  for (VertexSet e : edges_)
    if (!ground.contains_all(e))
      fail(ErrorCode::invalid_vertex, "edge " + e.to_string() +
                                          " has a vertex >= n=" + std::to_string(n));
  std::sort(edges_.begin(), edges_.end(), CanonicalLess{});
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    fail(ErrorCode::invalid_argument, "duplicate edge " + dup->to_string());
}

long Hypergraph::index_of(VertexSet e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, CanonicalLess{});
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<long>(it - edges_.begin());
}

bool Hypergraph::contains_edge(VertexSet e) const { return index_of(e) >= 0; }

// --- Graph -----------------------------------------------------------------

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    fail(ErrorCode::invalid_argument,
         "vertex count " + std::to_string(n) + " outside [0,64]");
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const VertexPair> edges) : Graph(n) {
  for (const auto& p : edges) add_edge(p);
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t b = adj_[u] & bits_above(u); b; b &= b - 1)
      out.emplace_back(u, std::countr_zero(b));
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    fail(ErrorCode::invalid_vertex, "graph edge endpoint out of range");
  if (u == v) fail(ErrorCode::invalid_argument, "graph loops are not allowed");
  adj_[u] |= 1ULL << v;
  adj_[v] |= 1ULL << u;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    fail(ErrorCode::invalid_vertex, "graph edge endpoint out of range");
  adj_[u] &= ~(1ULL << v);
  adj_[v] &= ~(1ULL << u);
}

Graph Graph::induced(VertexSet keep) const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v)
    if (keep.contains(v)) g.adj_[v] = adj_[v] & keep.bits();
  return g;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s.members())
    if (!VertexSet{adj_[v]}.contains_all(s.without(v))) return false;
  return true;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s.members())
    if (VertexSet{adj_[v]}.intersects(s)) return false;
  return true;
}

std::size_t Graph::edges_inside(VertexSet s) const {
  std::size_t twice = 0;
  for (int v : s.members()) twice += std::popcount(adj_[v] & s.bits());
  return twice / 2;
}

std::size_t Graph::edges_between(VertexSet a, VertexSet b) const {
  std::size_t count = 0;
  for (int v : a.members()) count += std::popcount(adj_[v] & b.bits());
  return count;
}

// --- operations --------------------------------------------------------------

Graph shadow2(const Hypergraph& h) {
  int n = h.vertex_count();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (VertexSet e : h.edges()) {
    if (e.size() < 2) continue;
    for (std::uint64_t b = e.bits(); b; b &= b - 1) {
      int v = std::countr_zero(b);
      rows[v] |= e.bits() & ~(1ULL << v);
    }
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (std::uint64_t b = rows[u] & bits_above(u); b; b &= b - 1)
      g.add_edge(u, std::countr_zero(b));
  return g;
}

std::size_t degree(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.vertex_count())
    fail(ErrorCode::invalid_vertex, "vertex " + std::to_string(v) +
                                        " outside [0," + std::to_string(h.vertex_count()) + ")");
  std::size_t d = 0;
  for (VertexSet e : h.edges()) d += e.contains(v);
  return d;
}

std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(static_cast<std::size_t>(h.vertex_count()), 0);
  for (VertexSet e : h.edges())
    for (std::uint64_t b = e.bits(); b; b &= b - 1) ++d[std::countr_zero(b)];
  return d;
}

std::size_t min_degree(const Hypergraph& h) {
  auto d = degrees(h);
  if (d.empty()) return 0;
  return *std::min_element(d.begin(), d.end());
}

std::vector<VertexSet> all_subsets(VertexSet ground, int min_size) {
  std::vector<VertexSet> out;
  std::uint64_t g = ground.bits();
  // Enumerate submasks of g, including g itself and 0.
  std::uint64_t s = g;
  while (true) {
    if (std::popcount(s) >= min_size) out.emplace_back(s);
    if (s == 0) break;
    s = (s - 1) & g;
  }
  return out;
}

Hypergraph down_close(const Hypergraph& h) {
  std::vector<VertexSet> all;
  for (VertexSet e : h.edges()) {
    auto subs = all_subsets(e);
    all.insert(all.end(), subs.begin(), subs.end());
  }
  std::sort(all.begin(), all.end(), CanonicalLess{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return Hypergraph(h.vertex_count(), std::move(all));
}

bool is_downset(const Hypergraph& h) {
  // Closed under removing one element suffices.
  for (VertexSet e : h.edges())
    for (int v : e.members())
      if (!h.contains_edge(e.without(v))) return false;
  return true;
}

const char* to_string(CertificateFault fault) noexcept {
  switch (fault) {
    case CertificateFault::none: return "ok";
    case CertificateFault::malformed_length: return "malformed_length";
    case CertificateFault::cycle_too_short: return "cycle_too_short";
    case CertificateFault::vertex_out_of_range: return "vertex_out_of_range";
    case CertificateFault::duplicate_vertex: return "duplicate_vertex";
    case CertificateFault::duplicate_edge: return "duplicate_edge";
    case CertificateFault::edge_not_in_hypergraph: return "edge_not_in_hypergraph";
    case CertificateFault::pair_not_contained: return "pair_not_contained";
  }
  return "unknown";
}

CertificateCheck verify_certificate(const Hypergraph& h, const BergeCertificate& c) {
  const std::size_t nv = c.vertices.size();
  const std::size_t ne = c.edges.size();
  if (c.kind == CertificateKind::path) {
    if (nv != ne + 1) return {CertificateFault::malformed_length, 0};
  } else {
    if (nv != ne) return {CertificateFault::malformed_length, 0};
    if (ne < 2) return {CertificateFault::cycle_too_short, 0};
  }
  VertexSet seen;
  for (std::size_t i = 0; i < nv; ++i) {
    int v = c.vertices[i];
    if (v < 0 || v >= h.vertex_count())
      return {CertificateFault::vertex_out_of_range, i};
    if (seen.contains(v)) return {CertificateFault::duplicate_vertex, i};
    seen = seen.with(v);
  }
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (c.edges[i] == c.edges[j]) return {CertificateFault::duplicate_edge, i};
  for (std::size_t i = 0; i < ne; ++i)
    if (!h.contains_edge(c.edges[i]))
      return {CertificateFault::edge_not_in_hypergraph, i};
  for (std::size_t i = 0; i < ne; ++i) {
    int a = c.vertices[i];
    int b = c.vertices[(i + 1) % nv];
    if (!c.edges[i].contains(a) || !c.edges[i].contains(b))
      return {CertificateFault::pair_not_contained, i};
  }
  return {};
}

// --- .bhg text format ----------------------------------------------------------

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  // Next non-blank, non-comment line; false at end of input.
  bool next(std::string_view& line) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      std::size_t first = raw.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;
      if (raw[first] == '#') continue;
      line = raw.substr(first);
      return true;
    }
    return false;
  }
};

std::vector<long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": expected integers");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

struct RawEdges {
  int n = 0;
  std::vector<VertexSet> edges;
};

RawEdges parse_raw(std::string_view text, int required_size) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) fail(ErrorCode::parse, "missing header line \"n m\"");
  auto header = parse_ints(line, reader.line_no);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0)
    fail(ErrorCode::parse, "malformed header: expected \"n m\"");
  if (header[0] > kMaxVertices)
    fail(ErrorCode::parse, "vertex count " + std::to_string(header[0]) + " exceeds 64");
  RawEdges raw;
  raw.n = static_cast<int>(header[0]);
  const long m = header[1];
  raw.edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!reader.next(line))
      fail(ErrorCode::parse, "expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(i));
    auto nums = parse_ints(line, reader.line_no);
    const std::string where = "line " + std::to_string(reader.line_no) + ": ";
    if (nums.empty() || nums[0] < 0 || static_cast<long>(nums.size()) != nums[0] + 1)
      fail(ErrorCode::parse, where + "edge size does not match member count");
    if (required_size >= 0 && nums[0] != required_size)
      fail(ErrorCode::parse, where + "graph edges must have size 2");
    std::uint64_t bits = 0;
    for (std::size_t j = 1; j < nums.size(); ++j) {
      long v = nums[j];
      if (v < 0 || v >= raw.n)
        fail(ErrorCode::parse, where + "vertex " + std::to_string(v) + " out of range");
      if (j > 1 && v <= nums[j - 1])
        fail(ErrorCode::parse, where + "edge members must be distinct and ascending");
      bits |= 1ULL << v;
    }
    raw.edges.emplace_back(bits);
  }
  if (reader.next(line)) fail(ErrorCode::parse, "trailing content after edge lines");
  return raw;
}

void append_edge_line(std::string& out, VertexSet e) {
  out += std::to_string(e.size());
  for (int v : e.members()) {
    out += ' ';
    out += std::to_string(v);
  }
  out += '\n';
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  RawEdges raw = parse_raw(text, -1);
  std::vector<VertexSet> sorted = raw.edges;
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) fail(ErrorCode::parse, "duplicate edge " + dup->to_string());
  return Hypergraph(raw.n, std::move(sorted));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.vertex_count()) + " " + std::to_string(h.edge_count()) + "\n";
  for (VertexSet e : h.edges()) append_edge_line(out, e);
  return out;
}

Graph parse_graph(std::string_view text) {
  RawEdges raw = parse_raw(text, 2);
  Graph g(raw.n);
  for (VertexSet e : raw.edges) {
    auto m = e.members();
    if (g.has_edge(m[0], m[1]))
      fail(ErrorCode::parse, "duplicate edge " + e.to_string());
    g.add_edge(m[0], m[1]);
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  auto edges = g.edges();
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& p : edges) append_edge_line(out, p.as_set());
  return out;
}

}  // namespace berge
