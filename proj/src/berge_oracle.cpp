#include "berge/berge_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace berge {

PathOrderKey path_order_key(const BergeCertificate& path) {
  PathOrderKey key;
  key.length = path.edges.size();
  for (VertexSet e : path.edges) key.total_size += static_cast<std::size_t>(e.size());
  return key;
}

namespace {

void check_scale(const Hypergraph& h, const OracleOptions& opts) {
  if (!opts.allow_large && h.vertex_count() > kOracleMaxVertices)
    fail(ErrorCode::guardrail, "Berge oracles are limited to n <= 16 (got n=" +
                                   std::to_string(h.vertex_count()) +
                                   "); pass allow_large to override");
}

// Backtracking over ordered representative-vertex sequences. The consecutive
// pairs of the current sequence are kept matched to distinct hyperedges; a
// new pair is accepted only if the matching can be augmented, and each
// augmentation takes the cheapest reachable free hyperedge so the matched
// edge set is a minimum-total-size assignment for the current sequence.
class SequenceSearch {
 public:
  explicit SequenceSearch(const Hypergraph& h) : n_(h.vertex_count()) {
    for (VertexSet e : h.edges())
      if (e.size() >= 2) edges_.push_back(e);
    const std::size_t m = edges_.size();
    size_.resize(m);
    for (std::size_t i = 0; i < m; ++i) size_[i] = edges_[i].size();
    candidates_.assign(static_cast<std::size_t>(n_ * n_), {});
    for (std::size_t i = 0; i < m; ++i) {
      auto mem = edges_[i].members();
      for (std::size_t a = 0; a < mem.size(); ++a)
        for (std::size_t b = a + 1; b < mem.size(); ++b) {
          candidates_[mem[a] * n_ + mem[b]].push_back(static_cast<int>(i));
          candidates_[mem[b] * n_ + mem[a]].push_back(static_cast<int>(i));
        }
    }
    shadow_ = shadow2(h);
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return shadow_.degree(a) > shadow_.degree(b);
    });
    rank_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) rank_[order_[i]] = i;
    edge_left_.assign(m, -1);
    edge_seen_.assign(m, 0);
    edge_parent_.assign(m, -1);
    free_by_size_.assign(static_cast<std::size_t>(n_ + 1), 0);
    for (int s : size_) ++free_by_size_[s];
  }

  int vertex_count() const { return n_; }
  std::size_t usable_edges() const { return edges_.size(); }
  const std::vector<int>& order() const { return order_; }
  int rank(int v) const { return rank_[v]; }
  const Graph& shadow() const { return shadow_; }
  long cost() const { return cost_; }
  std::size_t depth() const { return left_a_.size(); }

  // Appends the pair {a,b} as a new left node; false (and no change) when it
  // cannot be matched.
  bool push_pair(int a, int b) {
    const int left = static_cast<int>(left_a_.size());
    left_a_.push_back(a);
    left_b_.push_back(b);
    left_edge_.push_back(-1);
    marks_.push_back({log_.size(), cost_, -1});

    ++stamp_;
    queue_.clear();
    queue_.push_back(left);
    int best = -1;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      int x = queue_[qi];
      for (int e : candidates_[left_a_[x] * n_ + left_b_[x]]) {
        if (edge_seen_[e] == stamp_) continue;
        edge_seen_[e] = stamp_;
        edge_parent_[e] = x;
        int y = edge_left_[e];
        if (y < 0) {
          if (best < 0 || size_[e] < size_[best]) best = e;
        } else {
          queue_.push_back(y);
        }
      }
      if (best >= 0 && size_[best] == 2) break;
    }
    if (best < 0) {
      left_a_.pop_back();
      left_b_.pop_back();
      left_edge_.pop_back();
      marks_.pop_back();
      return false;
    }
    --free_by_size_[size_[best]];
    cost_ += size_[best];
    marks_.back().added = best;
    int e = best;
    while (true) {
      int x = edge_parent_[e];
      int prev = left_edge_[x];
      log_.push_back({x, prev});
      left_edge_[x] = e;
      edge_left_[e] = x;
      if (x == left) break;
      e = prev;
    }
    return true;
  }

  void pop_pair() {
    auto [log_mark, saved_cost, added] = marks_.back();
    marks_.pop_back();
    while (log_.size() > log_mark) {
      auto [x, prev] = log_.back();
      log_.pop_back();
      int cur = left_edge_[x];
      if (cur >= 0 && edge_left_[cur] == x) edge_left_[cur] = -1;
      left_edge_[x] = prev;
      if (prev >= 0) edge_left_[prev] = x;
    }
    // Augmentation only ever adds one edge to the matched set.
    ++free_by_size_[size_[added]];
    cost_ = saved_cost;
    left_a_.pop_back();
    left_b_.pop_back();
    left_edge_.pop_back();
  }

  // Sum of the `count` smallest free edge sizes; a lower bound on the cost of
  // extending the matched set by `count` edges.
  long cheapest_free(int count) const {
    long total = 0;
    for (int s = 2; s <= n_ && count > 0; ++s) {
      int take = std::min(count, free_by_size_[s]);
      total += static_cast<long>(take) * s;
      count -= take;
    }
    return count > 0 ? std::numeric_limits<long>::max() / 4 : total;
  }

  BergeCertificate certificate(CertificateKind kind, const std::vector<int>& seq) const {
    BergeCertificate c;
    c.kind = kind;
    c.vertices = seq;
    for (int e : left_edge_) c.edges.push_back(edges_[e]);
    return c;
  }

  VertexSet neighbors(int v) const { return shadow_.neighbors(v); }

 private:
  int n_;
  std::vector<VertexSet> edges_;
  std::vector<int> size_;
  std::vector<std::vector<int>> candidates_;
  Graph shadow_;
  std::vector<int> order_;
  std::vector<int> rank_;

  std::vector<int> left_a_, left_b_, left_edge_;
  std::vector<int> edge_left_;
  std::vector<unsigned> edge_seen_;
  std::vector<int> edge_parent_;
  std::vector<int> queue_;
  unsigned stamp_ = 0;
  struct LogEntry {
    int left;
    int prev;
  };
  std::vector<LogEntry> log_;
  struct Mark {
    std::size_t log_size;
    long cost;
    int added;
  };
  std::vector<Mark> marks_;
  long cost_ = 0;
  std::vector<int> free_by_size_;
};

// Vertices reachable from s in the shadow graph, restricted to `allowed`.
VertexSet component_of(const Graph& g, int s, VertexSet allowed) {
  VertexSet seen = VertexSet::single(s);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier.members()) next = next | (g.neighbors(v) & allowed);
    frontier = next - seen;
    seen = seen | next;
  }
  return seen;
}

class CycleFinder {
 public:
  CycleFinder(SequenceSearch& search, int min_length, bool stop_on_first)
      : s_(search), best_len_(min_length - 1), stop_on_first_(stop_on_first) {
    int m = static_cast<int>(s_.usable_edges());
    max_possible_ = std::min(s_.vertex_count(), m);
  }

  std::optional<BergeCertificate> run() {
    const int n = s_.vertex_count();
    for (int r = 0; r < n && !done_; ++r) {
      int start = s_.order()[r];
      VertexSet eligible;
      for (int q = r + 1; q < n; ++q) eligible = eligible.with(s_.order()[q]);
      eligible = component_of(s_.shadow(), start, eligible) - VertexSet::single(start);
      if (1 + eligible.size() <= best_len_) continue;
      start_ = start;
      seq_.assign(1, start);
      dfs(eligible);
    }
    return best_;
  }

 private:
  void dfs(VertexSet remaining) {
    const int len = static_cast<int>(seq_.size());
    const int last = seq_.back();
    if (len >= 2 && len > best_len_) {
      bool canonical_direction = len == 2 || s_.rank(seq_[1]) < s_.rank(last);
      if (canonical_direction && s_.push_pair(last, start_)) {
        best_len_ = len;
        best_ = s_.certificate(CertificateKind::cycle, seq_);
        s_.pop_pair();
        if (stop_on_first_ || best_len_ >= max_possible_) {
          done_ = true;
          return;
        }
      }
    }
    if (len + remaining.size() <= best_len_) return;
    VertexSet next = s_.neighbors(last) & remaining;
    for (int r : ranked(next)) {
      if (!s_.push_pair(last, r)) continue;
      seq_.push_back(r);
      dfs(remaining.without(r));
      seq_.pop_back();
      s_.pop_pair();
      if (done_) return;
      if (len + remaining.size() <= best_len_) return;
    }
  }

  std::vector<int> ranked(VertexSet set) const {
    std::vector<int> out = set.members();
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return s_.rank(a) < s_.rank(b); });
    return out;
  }

  SequenceSearch& s_;
  int best_len_;
  bool stop_on_first_;
  int max_possible_ = 0;
  bool done_ = false;
  int start_ = 0;
  std::vector<int> seq_;
  std::optional<BergeCertificate> best_;
};

// Longest paths (when target_length < 0) or, for a fixed target length, the
// minimum-total-size path of that length below a known cost ceiling.
class PathFinder {
 public:
  PathFinder(SequenceSearch& search, int min_edges, bool stop_on_first)
      : s_(search), best_len_(min_edges - 1), stop_on_first_(stop_on_first) {
    max_possible_ = std::min(s_.vertex_count() - 1, static_cast<int>(s_.usable_edges()));
  }

  void set_cost_mode(int length, long cost_ceiling) {
    cost_mode_ = true;
    target_len_ = length;
    best_cost_ = cost_ceiling;
  }

  std::optional<BergeCertificate> run() {
    const int n = s_.vertex_count();
    const VertexSet all = VertexSet::range(0, n);
    for (int r = 0; r < n && !done_; ++r) {
      int start = s_.order()[r];
      VertexSet reach = component_of(s_.shadow(), start, all).without(start);
      if (!cost_mode_ && reach.size() <= best_len_) continue;
      if (cost_mode_ && reach.size() < target_len_) continue;
      seq_.assign(1, start);
      dfs(reach);
    }
    return best_;
  }

 private:
  void dfs(VertexSet remaining) {
    const int edges = static_cast<int>(seq_.size()) - 1;
    if (cost_mode_) {
      if (edges == target_len_) {
        if (s_.cost() < best_cost_) {
          best_cost_ = s_.cost();
          best_ = s_.certificate(CertificateKind::path, seq_);
        }
        return;
      }
      if (edges + remaining.size() < target_len_) return;
      long bound = s_.cheapest_free(target_len_ - edges);
      if (s_.cost() + bound >= best_cost_) return;
    } else {
      if (edges > best_len_) {
        best_len_ = edges;
        best_ = s_.certificate(CertificateKind::path, seq_);
        if (stop_on_first_ || best_len_ >= max_possible_) {
          done_ = true;
          return;
        }
      }
      if (edges + remaining.size() <= best_len_) return;
    }
    const int last = seq_.back();
    std::vector<int> next = (s_.neighbors(last) & remaining).members();
    std::sort(next.begin(), next.end(),
              [&](int a, int b) { return s_.rank(a) < s_.rank(b); });
    for (int v : next) {
      if (!s_.push_pair(last, v)) continue;
      seq_.push_back(v);
      dfs(remaining.without(v));
      seq_.pop_back();
      s_.pop_pair();
      if (done_) return;
    }
  }

  SequenceSearch& s_;
  int best_len_;
  bool stop_on_first_;
  int max_possible_ = 0;
  bool done_ = false;
  bool cost_mode_ = false;
  int target_len_ = 0;
  long best_cost_ = 0;
  std::vector<int> seq_;
  std::optional<BergeCertificate> best_;
};

}  // namespace

std::optional<BergeCertificate> longest_berge_cycle(const Hypergraph& h, OracleOptions opts) {
  check_scale(h, opts);
  SequenceSearch search(h);
  return CycleFinder(search, 2, false).run();
}

std::optional<BergeCertificate> berge_cycle_at_least(const Hypergraph& h, int min_length,
                                                     OracleOptions opts) {
  check_scale(h, opts);
  SequenceSearch search(h);
  return CycleFinder(search, std::max(2, min_length), true).run();
}

std::optional<BergeCertificate> hamiltonian_berge_cycle(const Hypergraph& h,
                                                        OracleOptions opts) {
  check_scale(h, opts);
  if (h.vertex_count() < 2) return std::nullopt;
  SequenceSearch search(h);
  return CycleFinder(search, h.vertex_count(), true).run();
}

std::optional<BergeCertificate> longest_berge_path(const Hypergraph& h, OracleOptions opts) {
  check_scale(h, opts);
  SequenceSearch search(h);
  return PathFinder(search, 1, false).run();
}

std::optional<BergeCertificate> berge_path_at_least(const Hypergraph& h, int min_vertices,
                                                    OracleOptions opts) {
  check_scale(h, opts);
  SequenceSearch search(h);
  return PathFinder(search, std::max(1, min_vertices - 1), true).run();
}

std::optional<BergeCertificate> best_berge_path(const Hypergraph& h, OracleOptions opts) {
  check_scale(h, opts);
  SequenceSearch search(h);
  auto longest = PathFinder(search, 1, false).run();
  if (!longest) return std::nullopt;
  const PathOrderKey seed = path_order_key(*longest);
  PathFinder improve(search, 1, false);
  improve.set_cost_mode(static_cast<int>(seed.length), static_cast<long>(seed.total_size));
  auto better = improve.run();
  return better ? better : longest;
}

}  // namespace berge
