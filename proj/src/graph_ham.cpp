#include "berge/graph_ham.hpp"

#include <algorithm>
#include <array>

namespace berge {

namespace {

void check_scale(const Graph& g, const HamiltonOptions& opts) {
  if (!opts.allow_large && g.vertex_count() > kHamiltonMaxVertices)
    fail(ErrorCode::guardrail, "exact hamiltonicity is limited to n <= 24 (got n=" +
                                   std::to_string(g.vertex_count()) + ")");
}

VertexSet reach_within(const Graph& g, int s, VertexSet allowed) {
  VertexSet seen = VertexSet::single(s);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (std::uint64_t b = frontier.bits(); b; b &= b - 1)
      next = next | (g.neighbors(std::countr_zero(b)) & allowed);
    frontier = next - seen;
    seen = seen | next;
  }
  return seen;
}

// Depth-first extension of a path from `start` that must cover every vertex
// and finish adjacent to `target` (a cycle when target == start).
class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, int start, int target)
      : g_(g), n_(g.vertex_count()), start_(start), target_(target) {}

  bool run() {
    path_[0] = start_;
    len_ = 1;
    VertexSet unvisited = VertexSet::range(0, n_).without(start_);
    if (target_ != start_) unvisited = unvisited.without(target_);
    return extend(start_, unvisited);
  }

  std::vector<int> path() const { return {path_.begin(), path_.begin() + len_}; }

 private:
  // `unvisited` excludes the fixed endpoint target_ when it differs from start.
  bool extend(int last, VertexSet unvisited) {
    if (unvisited.empty()) {
      if (!g_.has_edge(last, target_)) return false;
      if (target_ != start_) path_[len_++] = target_;
      return true;
    }
    // Every unvisited vertex still needs two usable path neighbours.
    const VertexSet ends = VertexSet::single(last) | VertexSet::single(target_);
    const VertexSet open = unvisited | ends;
    for (std::uint64_t b = unvisited.bits(); b; b &= b - 1) {
      int u = std::countr_zero(b);
      if ((g_.neighbors(u) & open).size() < 2) return false;
    }
    VertexSet frontier = g_.neighbors(last) & unvisited;
    if (frontier.empty()) return false;
    // The remaining vertices plus the target must hang together.
    VertexSet rest = unvisited | VertexSet::single(target_);
    if (!reach_within(g_, target_, rest).contains_all(rest)) return false;

    // Fewest onward options first.
    std::array<int, kMaxVertices> cand{};
    std::array<int, kMaxVertices> key{};
    int count = 0;
    for (std::uint64_t b = frontier.bits(); b; b &= b - 1) {
      int v = std::countr_zero(b);
      cand[count] = v;
      key[count] = (g_.neighbors(v) & open).size();
      ++count;
    }
    for (int i = 1; i < count; ++i)
      for (int j = i; j > 0 && key[j] < key[j - 1]; --j) {
        std::swap(key[j], key[j - 1]);
        std::swap(cand[j], cand[j - 1]);
      }
    for (int i = 0; i < count; ++i) {
      int v = cand[i];
      path_[len_++] = v;
      if (extend(v, unvisited.without(v))) return true;
      --len_;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int start_;
  int target_;
  std::array<int, kMaxVertices + 1> path_{};
  int len_ = 0;
};

// Longest cycle through `start` using only vertices with larger index.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int stop_at) : g_(g), stop_at_(stop_at) {}

  int best() const { return best_; }
  bool done() const { return best_ >= stop_at_; }

  void from(int start) {
    start_ = start;
    VertexSet allowed = VertexSet{bits_above(start)} & VertexSet::range(0, g_.vertex_count());
    allowed = reach_within(g_, start, allowed).without(start);
    if (1 + allowed.size() <= best_) return;
    extend(start, 1, allowed);
  }

 private:
  void extend(int last, int len, VertexSet remaining) {
    if (len >= 3 && g_.has_edge(last, start_) && len > best_) {
      best_ = len;
      if (done()) return;
    }
    if (len + remaining.size() <= best_) return;
    VertexSet next = g_.neighbors(last) & remaining;
    for (std::uint64_t b = next.bits(); b; b &= b - 1) {
      int v = std::countr_zero(b);
      extend(v, len + 1, remaining.without(v));
      if (done()) return;
    }
  }

  const Graph& g_;
  int stop_at_;
  int start_ = 0;
  int best_ = 0;
};

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g, HamiltonOptions opts) {
  check_scale(g, opts);
  const int n = g.vertex_count();
  if (n < 3) return std::nullopt;
  if (g.min_degree() < 2) return std::nullopt;
  HamiltonSearch search(g, 0, 0);
  if (!search.run()) return std::nullopt;
  return search.path();
}

std::optional<std::vector<int>> hamiltonian_path(const Graph& g, int from, int to,
                                                 HamiltonOptions opts) {
  check_scale(g, opts);
  const int n = g.vertex_count();
  if (from < 0 || to < 0 || from >= n || to >= n)
    fail(ErrorCode::invalid_vertex, "hamiltonian_path endpoint out of range");
  if (from == to) {
    if (n == 1) return std::vector<int>{from};
    return std::nullopt;
  }
  HamiltonSearch search(g, from, to);
  if (!search.run()) return std::nullopt;
  return search.path();
}

int circumference(const Graph& g, HamiltonOptions opts) {
  check_scale(g, opts);
  const int n = g.vertex_count();
  CycleSearch search(g, n);
  for (int s = 0; s < n && !search.done(); ++s) search.from(s);
  return search.best();
}

bool has_cycle_at_least(const Graph& g, int min_length, HamiltonOptions opts) {
  check_scale(g, opts);
  const int n = g.vertex_count();
  if (min_length > n) return false;
  CycleSearch search(g, std::max(3, min_length));
  for (int s = 0; s < n && !search.done(); ++s) search.from(s);
  return search.done();
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  VertexSet all = VertexSet::range(0, n);
  return reach_within(g, 0, all) == all;
}

bool is_two_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  VertexSet all = VertexSet::range(0, n);
  for (int cut = 0; cut < n; ++cut) {
    VertexSet rest = all.without(cut);
    if (reach_within(g, rest.lowest(), rest) != rest) return false;
  }
  return true;
}

namespace {

std::uint64_t extend_cliques(const Graph& g, VertexSet candidates, int need) {
  if (need == 0) return 1;
  if (candidates.size() < need) return 0;
  std::uint64_t total = 0;
  for (std::uint64_t b = candidates.bits(); b; b &= b - 1) {
    int v = std::countr_zero(b);
    VertexSet later = VertexSet{candidates.bits() & bits_above(v)};
    total += extend_cliques(g, later & g.neighbors(v), need - 1);
  }
  return total;
}

}  // namespace

std::uint64_t count_cliques(const Graph& g, int r) {
  if (r < 1) fail(ErrorCode::invalid_argument, "clique size must be >= 1");
  return extend_cliques(g, VertexSet::range(0, g.vertex_count()), r);
}

Graph bondy_chvatal_closure(const Graph& g) {
  Graph c = g;
  const int n = g.vertex_count();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!c.has_edge(u, v) && c.degree(u) + c.degree(v) >= n) {
          c.add_edge(u, v);
          changed = true;
        }
  }
  return c;
}

bool hamiltonian_connected_by_density(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  return n >= 5 && static_cast<std::int64_t>(g.edge_count()) >= choose2(n) - 2;
}

bool is_hamiltonian_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 12) fail(ErrorCode::guardrail, "exact hamiltonian-connectedness is limited to n <= 12");
  if (n <= 1) return true;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!hamiltonian_path(g, x, y)) return false;
  return true;
}

std::int64_t erdos_h(int n, int d) {
  if (d < 1 || d > (n - 1) / 2)
    fail(ErrorCode::invalid_argument, "erdos_h requires 1 <= d <= floor((n-1)/2), got n=" +
                                          std::to_string(n) + " d=" + std::to_string(d));
  return choose2(n - d) + static_cast<std::int64_t>(d) * d;
}

std::int64_t erdos_bound(int n, int d) {
  return std::max(erdos_h(n, d), erdos_h(n, (n - 1) / 2));
}

}  // namespace berge
