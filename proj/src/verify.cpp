#include "berge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "berge/berge_oracle.hpp"
#include "berge/bounds.hpp"
#include "berge/graph_ham.hpp"

namespace berge {

const char* to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::thm4: return "thm4";
    case TheoremId::thm5: return "thm5";
    case TheoremId::thm6: return "thm6";
    case TheoremId::lemma5G: return "lemma5G";
    case TheoremId::erdosBound: return "erdosBound";
    case TheoremId::egGraph: return "egGraph";
    case TheoremId::luoCliques: return "luoCliques";
    case TheoremId::dirac: return "dirac";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string& s) {
  for (auto id : {TheoremId::thm4, TheoremId::thm5, TheoremId::thm6, TheoremId::lemma5G,
                  TheoremId::erdosBound, TheoremId::egGraph, TheoremId::luoCliques, TheoremId::dirac})
    if (s == to_string(id)) return id;
  return std::nullopt;
}

const char* to_string(VerifyMode m) noexcept {
  return m == VerifyMode::exhaustive ? "exhaustive" : "random";
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(seed ^ mix(index));
}

Hypergraph random_hypergraph(int n, double p, std::size_t min_deg, std::uint64_t seed,
                             int max_attempts) {
  if (n < 1 || n > 20) fail(ErrorCode::guardrail, "random hypergraphs are limited to n <= 20");
  if (!(p > 0.0 && p <= 1.0)) fail(ErrorCode::invalid_argument, "p must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(p);
  const std::uint64_t limit = 1ULL << n;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<VertexSet> edges;
    for (std::uint64_t s = 3; s < limit; ++s)
      if (std::popcount(s) >= 2 && keep(rng)) edges.push_back(VertexSet{s});
    Hypergraph h(n, std::move(edges));
    if (min_degree(h) >= min_deg) return h;
  }
  fail(ErrorCode::precondition, "could not sample a hypergraph meeting the degree threshold");
}

std::uint64_t for_each_downset(int n, const std::function<bool(const Hypergraph&)>& fn) {
  if (n < 0 || n > 5) fail(ErrorCode::guardrail, "downset enumeration is limited to n <= 5");
  std::vector<VertexSet> order = all_subsets(VertexSet::range(0, n), 0);
  std::sort(order.begin(), order.end(), CanonicalLess{});
  std::vector<VertexSet> chosen;
  std::uint64_t visited = 0;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == order.size()) {
      ++visited;
      if (!fn(Hypergraph(n, chosen))) stop = true;
      return;
    }
    rec(i + 1);
    VertexSet s = order[i];
    bool allowed = true;
    for (int v : s.members()) {
      VertexSet sub = s.without(v);
      if (!std::binary_search(chosen.begin(), chosen.end(), sub, CanonicalLess{})) {
        allowed = false;
        break;
      }
    }
    if (s.empty() || allowed) {
      chosen.push_back(s);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return visited;
}

namespace {

struct Outcome {
  bool hypothesis = false;
  bool holds = true;
  std::int64_t value = 0;  // quantity tracked for the extremum
};

struct Tally {
  std::uint64_t scanned = 0;
  std::uint64_t checked = 0;
  std::optional<std::int64_t> extremum;
  std::optional<std::uint64_t> first_failure;

  void merge(const Tally& o) {
    scanned += o.scanned;
    checked += o.checked;
    if (o.extremum && (!extremum || *o.extremum > *extremum)) extremum = o.extremum;
    if (o.first_failure && (!first_failure || *o.first_failure < *first_failure))
      first_failure = o.first_failure;
  }
};

template <class Instance>
Tally sweep(std::uint64_t count, int jobs, const std::function<Instance(std::uint64_t)>& make,
            const std::function<Outcome(const Instance&)>& eval) {
  constexpr std::uint64_t kBlock = 1024;
  std::atomic<std::uint64_t> next{0};
  std::mutex lock;
  Tally total;
  auto worker = [&] {
    Tally local;
    while (true) {
      std::uint64_t begin = next.fetch_add(kBlock);
      if (begin >= count) break;
      std::uint64_t end = std::min(count, begin + kBlock);
      for (std::uint64_t i = begin; i < end; ++i) {
        Outcome o = eval(make(i));
        ++local.scanned;
        if (!o.hypothesis) continue;
        ++local.checked;
        if (!local.extremum || o.value > *local.extremum) local.extremum = o.value;
        if (!o.holds && (!local.first_failure || i < *local.first_failure)) local.first_failure = i;
      }
    }
    std::lock_guard<std::mutex> guard(lock);
    total.merge(local);
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return total;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1ULL) g.add_edge(u, v);
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (keep(rng)) g.add_edge(u, v);
  return g;
}

bool is_hypergraph_theorem(TheoremId id) {
  return id == TheoremId::thm4 || id == TheoremId::thm5 || id == TheoremId::thm6;
}

[[noreturn]] void envelope(const std::string& what) {
  fail(ErrorCode::guardrail, what + " (pass the override to lift the envelope)");
}

}  // namespace

VerifyReport verify_theorem(TheoremId id, const VerifyParams& params) {
  VerifyReport report;
  report.theorem = id;
  report.params = params;
  const int n = params.n;
  const int k = params.k;
  const bool exhaustive = params.mode == VerifyMode::exhaustive;
  if (!exhaustive && (!(params.p > 0.0) || params.p > 1.0))
    fail(ErrorCode::invalid_argument, "p must lie in (0, 1]");

  if (is_hypergraph_theorem(id)) {
    if (k < 3) fail(ErrorCode::invalid_argument, "k must be >= 3");
    if (n < 1) fail(ErrorCode::invalid_argument, "n must be >= 1");
    std::function<Outcome(const Hypergraph&)> eval;
    std::size_t min_deg = 0;
    if (id == TheoremId::thm4 || id == TheoremId::thm5) {
      if (k > 20) fail(ErrorCode::invalid_argument, "k too large");
      const std::size_t need = (std::size_t{1} << (k - 2)) + (id == TheoremId::thm4 ? 1 : 2);
      min_deg = need;
      eval = [id, k, need](const Hypergraph& h) {
        Outcome o;
        o.hypothesis = h.vertex_count() > 0 && min_degree(h) >= need;
        if (!o.hypothesis) return o;
        o.holds = id == TheoremId::thm4 ? berge_path_at_least(h, k).has_value()
                                        : berge_cycle_at_least(h, k).has_value();
        return o;
      };
    } else {
      if (n < k) fail(ErrorCode::invalid_argument, "thm6 needs n >= k");
      Rational bound = eg_hypergraph_bound(n, k);
      report.bound = bound.to_string();
      eval = [k, bound](const Hypergraph& h) {
        Outcome o;
        o.hypothesis = !berge_cycle_at_least(h, k).has_value();
        o.value = static_cast<std::int64_t>(h.edge_count());
        o.holds = Rational(o.value) <= bound;
        return o;
      };
    }

    std::function<Hypergraph(std::uint64_t)> make;
    std::uint64_t count = 0;
    std::vector<Hypergraph> downsets;
    if (exhaustive) {
      if (n <= 4) {
        const bool with_empty = id == TheoremId::thm6;
        std::vector<VertexSet> items = all_subsets(VertexSet::range(0, n), with_empty ? 0 : 1);
        std::sort(items.begin(), items.end(), CanonicalLess{});
        count = 1ULL << items.size();
        report.reduction = with_empty ? "all labeled families of subsets of [n]"
                                      : "all labeled families of nonempty subsets of [n]";
        make = [n, items](std::uint64_t mask) {
          std::vector<VertexSet> edges;
          for (std::size_t b = 0; b < items.size(); ++b)
            if ((mask >> b) & 1ULL) edges.push_back(items[b]);
          return Hypergraph(n, std::move(edges));
        };
      } else if (n == 5) {
        for_each_downset(n, [&](const Hypergraph& h) {
          downsets.push_back(h);
          return true;
        });
        count = downsets.size();
        report.reduction =
            "downsets of subsets of [n] only; replacing an edge by a missing subset keeps the "
            "edge count and creates no longer Berge cycle, so an extremal family can be taken "
            "to be a downset";
        make = [&downsets](std::uint64_t i) { return downsets[i]; };
      } else {
        envelope("exhaustive hypergraph sweeps are limited to n <= 5");
      }
    } else {
      if (n > kOracleMaxVertices && !params.allow_large) envelope("random hypergraph sweeps need n <= 16");
      count = params.trials;
      report.reduction = "random: each subset of size >= 2 kept with probability p, resampled "
                         "until the degree hypothesis holds";
      const double p = params.p;
      const std::uint64_t seed = params.seed;
      make = [n, p, min_deg, seed](std::uint64_t i) {
        return random_hypergraph(n, p, min_deg, instance_seed(seed, i));
      };
    }

    Tally tally = sweep<Hypergraph>(count, params.jobs, make, eval);
    report.instances_scanned = tally.scanned;
    report.instances_checked = tally.checked;
    if (id == TheoremId::thm6) {
      report.extremum = tally.extremum;
      report.attained = tally.extremum && report.bound == std::to_string(*tally.extremum);
    }
    if (tally.first_failure) {
      Hypergraph bad = make(*tally.first_failure);
      Outcome a = eval(bad), b = eval(bad);
      if (a.holds != b.holds || a.hypothesis != b.hypothesis)
        fail(ErrorCode::theorem_violation, "nondeterministic check");
      if (a.hypothesis && !a.holds) report.counterexample = serialize_hypergraph(bad);
    }
    return report;
  }

  // Graph statements.
  if (n < 1) fail(ErrorCode::invalid_argument, "n must be >= 1");
  std::function<Outcome(const Graph&)> eval;
  switch (id) {
    case TheoremId::lemma5G: {
      if (n < 7) fail(ErrorCode::invalid_argument, "lemma5G needs n >= 7 so that k >= 3");
      const int kk = (n - 1) / 2;
      eval = [kk](const Graph& g) {
        Outcome o;
        o.hypothesis = g.min_degree() >= kk && !is_hamiltonian(g);
        if (!o.hypothesis) return o;
        ClassifyResult res = classify_dense_nonhamiltonian(g, kk);
        o.holds = res.classified();
        for (const auto& w : res.witnesses) o.holds = o.holds && satisfies_class(g, w);
        return o;
      };
      break;
    }
    case TheoremId::erdosBound: {
      const int top = (n - 1) / 2;
      if (top < 1) fail(ErrorCode::invalid_argument, "erdosBound needs n >= 3");
      int lo = 1, hi = top;
      if (params.d) {
        if (*params.d < 1 || *params.d > top) fail(ErrorCode::invalid_argument, "d out of range");
        lo = hi = *params.d;
        report.bound = std::to_string(erdos_bound(n, *params.d));
      }
      eval = [n, lo, hi](const Graph& g) {
        Outcome o;
        const int delta = g.min_degree();
        if (delta < lo) return o;
        const auto e = static_cast<std::int64_t>(g.edge_count());
        o.value = e;
        o.hypothesis = !is_hamiltonian(g);
        if (!o.hypothesis) return o;
        for (int d = lo; d <= std::min(hi, delta); ++d)
          if (e > erdos_bound(n, d)) o.holds = false;
        return o;
      };
      break;
    }
    case TheoremId::egGraph:
    case TheoremId::luoCliques: {
      if (k < 3 || n < k) fail(ErrorCode::invalid_argument, "needs n >= k >= 3");
      if (id == TheoremId::egGraph) {
        Rational bound = eg_graph_bound(n, k);
        report.bound = bound.to_string();
        eval = [k, bound](const Graph& g) {
          Outcome o;
          o.value = static_cast<std::int64_t>(g.edge_count());
          o.hypothesis = !has_cycle_at_least(g, k);
          o.holds = Rational(o.value) <= bound;
          return o;
        };
      } else {
        int lo = 1, hi = k - 1;
        if (params.r) {
          if (*params.r < 1) fail(ErrorCode::invalid_argument, "r must be >= 1");
          lo = hi = *params.r;
          report.bound = luo_bound(n, k, *params.r).to_string();
        }
        eval = [n, k, lo, hi](const Graph& g) {
          Outcome o;
          o.hypothesis = !has_cycle_at_least(g, k);
          if (!o.hypothesis) return o;
          for (int r = lo; r <= hi; ++r) {
            auto c = static_cast<std::int64_t>(count_cliques(g, r));
            if (lo == hi) o.value = c;
            if (luo_bound(n, k, r) < Rational(c)) o.holds = false;
          }
          return o;
        };
      }
      break;
    }
    case TheoremId::dirac: {
      if (n < 3) fail(ErrorCode::invalid_argument, "dirac needs n >= 3");
      eval = [n](const Graph& g) {
        Outcome o;
        const int delta = g.min_degree();
        const bool dense = 2 * delta >= n;
        const bool two_conn = is_two_connected(g);
        o.hypothesis = dense || two_conn;
        if (!o.hypothesis) return o;
        if (dense && !is_hamiltonian(g)) o.holds = false;
        if (two_conn && !has_cycle_at_least(g, std::min(n, 2 * delta))) o.holds = false;
        return o;
      };
      break;
    }
    default:
      fail(ErrorCode::invalid_argument, "not a graph statement");
  }

  std::function<Graph(std::uint64_t)> make;
  std::uint64_t count = 0;
  if (exhaustive) {
    const int max_n = params.allow_large ? 8 : 7;
    if (n > max_n) envelope("exhaustive graph sweeps are limited to n <= 7");
    count = 1ULL << (n * (n - 1) / 2);
    report.reduction = "all labeled graphs on [n]";
    make = [n](std::uint64_t mask) { return graph_from_mask(n, mask); };
  } else {
    if (n > kHamiltonMaxVertices) envelope("random graph sweeps need n <= 24");
    count = params.trials;
    report.reduction = "random: each pair kept with probability p";
    const double p = params.p;
    const std::uint64_t seed = params.seed;
    make = [n, p, seed](std::uint64_t i) { return random_graph(n, p, instance_seed(seed, i)); };
  }
  Tally tally = sweep<Graph>(count, params.jobs, make, eval);
  report.instances_scanned = tally.scanned;
  report.instances_checked = tally.checked;
  if (report.bound) {
    report.extremum = tally.extremum;
    report.attained = tally.extremum && *report.bound == std::to_string(*tally.extremum);
  }
  if (tally.first_failure) {
    Graph bad = make(*tally.first_failure);
    Outcome a = eval(bad), b = eval(bad);
    if (a.holds != b.holds || a.hypothesis != b.hypothesis)
      fail(ErrorCode::theorem_violation, "nondeterministic check");
    if (a.hypothesis && !a.holds) report.counterexample = serialize_graph(bad);
  }
  return report;
}

}  // namespace berge
