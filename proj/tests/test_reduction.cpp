#include <doctest.h>

#include <functional>
#include <random>

#include "berge/graph_ham.hpp"
#include "berge/reduction.hpp"
#include "helpers.hpp"

using namespace berge;

namespace {

VertexSet S(std::initializer_list<int> v) { return VertexSet::of(v); }

std::vector<BipartiteMatching> all_matchings(const IncidenceBipartite& b) {
  std::vector<BipartiteMatching> out;
  BipartiteMatching m = BipartiteMatching::empty(b);
  std::function<void(std::size_t)> go = [&](std::size_t l) {
    if (l == b.left_count) {
      out.push_back(m);
      return;
    }
    go(l + 1);
    for (int r : b.left_adj[l]) {
      if (m.right_mate[r] != -1) continue;
      m.link(static_cast<int>(l), r);
      go(l + 1);
      m.unlink_left(static_cast<int>(l));
    }
  };
  go(0);
  return out;
}

std::size_t brute_max(const IncidenceBipartite& b) {
  std::size_t best = 0;
  for (const auto& m : all_matchings(b)) best = std::max(best, m.size());
  return best;
}

IncidenceBipartite bipartite_from_code(int a, int c, std::uint64_t code) {
  std::vector<std::pair<int, int>> links;
  for (int l = 0; l < a; ++l)
    for (int r = 0; r < c; ++r)
      if ((code >> (l * c + r)) & 1) links.push_back({l, r});
  return IncidenceBipartite::from_lists(a, c, links);
}

void check_exchange(const IncidenceBipartite& b) {
  auto ms = all_matchings(b);
  for (const auto& m1 : ms)
    for (const auto& m2 : ms) {
      bool inside = true;
      for (std::size_t r = 0; r < b.right_count && inside; ++r)
        if (m2.right_mate[r] != -1 && m1.right_mate[r] == -1) inside = false;
      if (!inside) continue;
      auto m3 = matching_exchange(b, m1, m2);
      REQUIRE(is_matching_of(b, m3));
      for (std::size_t r = 0; r < b.right_count; ++r) CHECK((m3.right_mate[r] != -1) == (m1.right_mate[r] != -1));
      for (std::size_t l = 0; l < b.left_count; ++l) {
        if (m2.left_mate[l] != -1) CHECK(m3.left_mate[l] != -1);
        int r = m3.left_mate[l];
        if (r != -1) CHECK((m1.left_mate[l] == r || m2.left_mate[l] == r));
      }
    }
}

}  // namespace

TEST_CASE("incidence examples") {
  auto b = build_incidence(Hypergraph(3, {S({0, 1, 2})}));
  CHECK(b.left_count == 1);
  CHECK(b.right_count == 3);
  CHECK(b.left_adj[0].size() == 3);
  auto b2 = build_incidence(Hypergraph(2, {S({0, 1})}));
  CHECK(b2.left_count == 1);
  CHECK(b2.right_count == 1);
  CHECK(b2.adjacent(0, 0));
  Hypergraph k3(3, all_subsets(VertexSet::range(0, 3), 1));
  auto b3 = build_incidence(k3);
  CHECK(b3.left_count == 7);
  CHECK(b3.right_count == 3);
  int p01 = b3.pair_index(VertexPair(0, 1));
  REQUIRE(p01 >= 0);
  std::vector<VertexSet> nbrs;
  for (int l : b3.right_adj[p01]) nbrs.push_back(b3.hyperedges[l]);
  CHECK(nbrs == std::vector<VertexSet>{S({0, 1}), S({0, 1, 2})});
  CHECK(b3.pair_index(VertexPair(0, 5)) == -1);
  CHECK_THROWS_AS(IncidenceBipartite::from_lists(1, 1, {{0, 1}}), Error);
}

TEST_CASE("reduction examples") {
  auto r1 = reduce(Hypergraph(3, {S({0, 1, 2})}));
  CHECK(r1.phi.size() == 1);
  CHECK(extract_berge_subgraph(Hypergraph(3, {S({0, 1, 2})}), r1.phi).edge_count() == 1);

  Hypergraph k3(3, all_subsets(VertexSet::range(0, 3), 1));
  MatchingMap phi = max_matching_prefer2(k3);
  CHECK(phi.size() == 3);
  for (const auto& e : phi.entries()) CHECK(e.edge == e.pair.as_set());
  CHECK_FALSE(phi.in_domain(S({0, 1, 2})));
  CHECK(extract_berge_subgraph(k3, phi) == testing_util::complete(3));

  Hypergraph h(4, {S({0, 1}), S({0, 1, 2}), S({0, 1, 3})});
  MatchingMap phi2 = max_matching_prefer2(h);
  CHECK(phi2.size() == 3);
  CHECK(phi2.image(S({0, 1})) == VertexPair(0, 1));
  auto i2 = phi2.image(S({0, 1, 2}));
  auto i3 = phi2.image(S({0, 1, 3}));
  REQUIRE(i2);
  REQUIRE(i3);
  CHECK((*i2 == VertexPair(0, 2) || *i2 == VertexPair(1, 2)));
  CHECK((*i3 == VertexPair(0, 3) || *i3 == VertexPair(1, 3)));
}

TEST_CASE("extraction and lifting examples") {
  CHECK(extract_berge_subgraph(Hypergraph(3, {}), MatchingMap{}).edge_count() == 0);
  Hypergraph one(2, {S({0, 1})});
  MatchingMap phi({{S({0, 1}), VertexPair(0, 1)}});
  CHECK(extract_berge_subgraph(one, phi).edge_count() == 1);
  CHECK_THROWS_AS(lift_cycle(phi, {0, 1, 2}), Error);
}

TEST_CASE("matching exchange examples") {
  // left a=0, b=1; right x=0, y=1; a~x, a~y, b~x
  auto b = IncidenceBipartite::from_lists(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  BipartiteMatching m1 = BipartiteMatching::empty(b);
  m1.link(0, 1);
  m1.link(1, 0);
  BipartiteMatching m2 = BipartiteMatching::empty(b);
  m2.link(0, 0);
  auto m3 = matching_exchange(b, m1, m2);
  CHECK(m3 == m1);
  CHECK(matching_exchange(b, m1, BipartiteMatching::empty(b)) == m1);
  CHECK(matching_exchange(b, m1, m1) == m1);
  // range(m2) not inside range(m1)
  BipartiteMatching small = BipartiteMatching::empty(b);
  small.link(1, 0);
  BipartiteMatching other = BipartiteMatching::empty(b);
  other.link(0, 1);
  CHECK_THROWS_AS(matching_exchange(b, small, other), Error);
}

TEST_CASE("matching map") {
  MatchingMap phi({{S({0, 1, 2}), VertexPair(1, 2)}, {S({0, 1}), VertexPair(0, 1)}});
  CHECK(phi.entries()[0].edge == S({0, 1}));
  CHECK(phi.preimage(VertexPair(1, 2)) == S({0, 1, 2}));
  CHECK_FALSE(phi.preimage(VertexPair(0, 2)).has_value());
  CHECK_THROWS_AS(phi.reassign(S({0, 1, 2}), VertexPair(0, 1)), Error);
  CHECK_THROWS_AS(phi.reassign(S({0, 1, 2}), VertexPair(0, 3)), Error);
  phi.reassign(S({0, 1, 2}), VertexPair(0, 2));
  CHECK(phi.image(S({0, 1, 2})) == VertexPair(0, 2));
  CHECK_THROWS_AS(MatchingMap({{S({0, 1}), VertexPair(0, 1)}, {S({0, 1}), VertexPair(0, 1)}}), Error);
  Hypergraph h(3, {S({0, 1}), S({0, 1, 2})});
  CHECK(is_valid_matching_map(h, phi));
  CHECK_FALSE(is_valid_matching_map(Hypergraph(3, {S({0, 1})}), phi));
}

TEST_CASE("invariant checker rejects broken matchings") {
  Hypergraph h(3, all_subsets(VertexSet::range(0, 3), 2));
  auto b = build_incidence(h);
  BipartiteMatching m = BipartiteMatching::empty(b);
  CHECK_THROWS_AS(check_reduction_invariants(b, m), Error);
  auto good = reduce(h);
  CHECK_NOTHROW(check_reduction_invariants(b, good.matching));
}

TEST_CASE("property: matchings are maximum, valid and keep 2-edges") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 9;
    double p = n <= 5 ? 0.4 : 4.0 * n / (1 << n);
    Hypergraph h = testing_util::random_hyper(rng, n, p, 1);
    auto r = reduce(h);
    CHECK(is_matching_of(r.incidence, r.matching));
    CHECK_FALSE(has_augmenting_path(r.incidence, r.matching));
    CHECK(is_valid_matching_map(h, r.phi));
    CHECK_NOTHROW(check_reduction_invariants(r.incidence, r.matching));
    for (auto e : h.edges())
      if (e.size() == 2) CHECK(r.phi.image(e) == VertexPair(e.lowest(), e.without(e.lowest()).lowest()));
    if (r.incidence.left_count <= 8 && r.incidence.right_count <= 6)
      CHECK(r.matching.size() == brute_max(r.incidence));
  }
}

TEST_CASE("property: augmenting path detector") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 400; ++t) {
    auto b = bipartite_from_code(4, 4, rng() & 0xFFFF);
    auto ms = all_matchings(b);
    std::size_t best = brute_max(b);
    const auto& m = ms[rng() % ms.size()];
    CHECK(has_augmenting_path(b, m) == (m.size() < best));
    CHECK(maximum_matching(b).size() == best);
  }
}

TEST_CASE("property: matching exchange exhaustive on 3+3, sampled on 4+4") {
  for (std::uint64_t code = 0; code < (1ULL << 9); ++code) check_exchange(bipartite_from_code(3, 3, code));
  std::mt19937_64 rng(43);
  for (int t = 0; t < 150; ++t) check_exchange(bipartite_from_code(4, 4, rng() & 0xFFFF));
}

TEST_CASE("property: lifting a hamiltonian cycle of G gives a Berge cycle") {
  std::mt19937_64 rng(44);
  int lifted = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 4 + t % 6;
    Hypergraph h = testing_util::random_hyper(rng, n, 6.0 * n / (1 << n), 2);
    auto r = reduce(h);
    Graph g = extract_berge_subgraph(h, r.phi);
    if (auto c = hamiltonian_cycle(g)) {
      auto cert = lift_cycle(r.phi, *c);
      CHECK(verify_certificate(h, cert).accepted());
      CHECK(cert.vertices.size() == static_cast<std::size_t>(n));
      ++lifted;
    }
  }
  CHECK(lifted > 20);
}
