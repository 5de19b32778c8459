#include <doctest.h>

#include "berge/berge_oracle.hpp"
#include "berge/bounds.hpp"
#include "berge/constructions.hpp"
#include "berge/graph_ham.hpp"
#include "helpers.hpp"

using namespace berge;

namespace {

VertexSet S(std::initializer_list<int> v) { return VertexSet::of(v); }

// Degree by scanning every edge, independent of the library's counter.
std::size_t min_deg_scan(const Hypergraph& h) {
  std::size_t best = SIZE_MAX;
  for (int v = 0; v < h.vertex_count(); ++v) {
    std::size_t d = 0;
    for (auto e : h.edges()) d += e.contains(v);
    best = std::min(best, d);
  }
  return best;
}

std::size_t cycle_len(const Hypergraph& h) {
  auto c = longest_berge_cycle(h);
  return c ? c->length() : 0;
}

}  // namespace

TEST_CASE("dirac sharpness") {
  auto d15 = dirac_sharpness(15, 1);
  CHECK(min_deg_scan(d15.h) == 128);
  REQUIRE(d15.obstruction);
  CHECK(d15.obstruction->kind == ObstructionKind::cut_vertex);
  CHECK(check_obstruction(d15.h, *d15.obstruction) == "");

  auto d16 = dirac_sharpness(16, 2);
  CHECK(min_deg_scan(d16.h) == 129);
  REQUIRE(d16.obstruction);
  CHECK(d16.obstruction->kind == ObstructionKind::cut_edge);
  CHECK(d16.obstruction->edge == VertexSet::range(0, 16));
  CHECK(check_obstruction(d16.h, *d16.obstruction) == "");

  auto d7 = dirac_sharpness(7, 1);
  CHECK(min_deg_scan(d7.h) == 8);
  CHECK_FALSE(hamiltonian_berge_cycle(d7.h).has_value());

  for (int n = 5; n <= 10; ++n)
    for (int v = 1; v <= 4; ++v) {
      bool fits = (v % 2 == 1) == (n % 2 == 1);
      if (!fits) {
        CHECK_THROWS_AS(dirac_sharpness(n, v), Error);
        continue;
      }
      auto c = dirac_sharpness(n, v);
      REQUIRE(c.obstruction);
      CHECK(check_obstruction(c.h, *c.obstruction) == "");
      CHECK_FALSE(hamiltonian_berge_cycle(c.h).has_value());
    }
  CHECK_THROWS_AS(dirac_sharpness(4, 2), Error);
  CHECK_THROWS_AS(dirac_sharpness(7, 5), Error);
}

TEST_CASE("dirac sharpness degrees follow the threshold") {
  for (int n = 7; n <= 20; ++n) {
    int v = n % 2 == 1 ? 1 : 2;
    std::size_t expect = n % 2 == 1 ? (std::size_t{1} << ((n - 1) / 2)) : (std::size_t{1} << (n / 2 - 1)) + 1;
    CHECK(min_deg_scan(dirac_sharpness(n, v).h) == expect);
  }
}

TEST_CASE("path sharpness") {
  auto p64 = path_sharpness(6, 4);
  CHECK(p64.h.edge_count() == 14);
  CHECK(min_deg_scan(p64.h) == 4);
  CHECK(longest_berge_path(p64.h)->vertices.size() == 3);
  REQUIRE(p64.obstruction);
  CHECK(check_obstruction(p64.h, *p64.obstruction) == "");
  CHECK(min_deg_scan(path_sharpness(4, 3).h) == 2);
  CHECK(min_deg_scan(path_sharpness(8, 5).h) == 8);
  CHECK_THROWS_AS(path_sharpness(7, 4), Error);
  CHECK_THROWS_AS(path_sharpness(6, 1), Error);
  CHECK(min_deg_scan(path_sharpness(6, 2).h) == 1);
}

TEST_CASE("cycle sharpness") {
  auto c73 = cycle_sharpness(7, 3, 2);
  CHECK(min_deg_scan(c73.h) == 3);
  CHECK(cycle_len(c73.h) == 2);
  auto c64 = cycle_sharpness(6, 4, 1);
  CHECK(min_deg_scan(c64.h) == 5);
  CHECK(cycle_len(c64.h) < 4);
  REQUIRE(c64.obstruction);
  CHECK(check_obstruction(c64.h, *c64.obstruction) == "");
  auto c43 = cycle_sharpness(4, 3, 1);
  CHECK(min_deg_scan(c43.h) == 3);
  CHECK(cycle_len(c43.h) == 2);
  CHECK_THROWS_AS(cycle_sharpness(3, 4, 1), Error);
  CHECK_THROWS_AS(cycle_sharpness(5, 3, 2), Error);  // two blocks give x degree 2
  CHECK_THROWS_AS(cycle_sharpness(7, 3, 3), Error);
}

TEST_CASE("eg sharpness") {
  auto e54 = eg_sharpness(5, 4);
  CHECK(e54.h.edge_count() == 14);
  CHECK(cycle_len(e54.h) == 3);
  CHECK(eg_sharpness(3, 3).h.edge_count() == 6);
  CHECK(eg_sharpness(7, 5).h.edge_count() == 30);
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 3}, {5, 3}, {5, 4}, {7, 4}, {7, 5}, {9, 4}}) {
    auto c = eg_sharpness(n, k);
    CHECK(down_close(c.h) == c.h);
    CHECK(Rational(static_cast<std::int64_t>(c.h.edge_count())) == eg_hypergraph_bound(n, k));
    REQUIRE(c.obstruction);
    CHECK(check_obstruction(c.h, *c.obstruction) == "");
  }
  CHECK_THROWS_AS(eg_sharpness(6, 4), Error);
}

TEST_CASE("eg sharpness shadow is a star of cliques") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 4}, {7, 4}, {9, 4}, {7, 5}, {9, 6}, {9, 3}}) {
    Graph s = shadow2(eg_sharpness(n, k).h);
    Graph f = fnk(n, k, BlockShape::star);
    CHECK(s.edge_count() == f.edge_count());
    // both: the apex n-1 is adjacent to everyone, and removing it leaves
    // disjoint (k-2)-cliques
    for (const Graph& g : {s, f}) {
      CHECK(g.degree(n - 1) == n - 1);
      Graph rest = g.induced(VertexSet::range(0, n - 1));
      for (int v = 0; v < n - 1; ++v) {
        VertexSet block = rest.neighbors(v).with(v);
        CHECK(block.size() == k - 2);
        CHECK(rest.is_clique(block));
      }
    }
  }
}

TEST_CASE("fnk") {
  Graph f54 = fnk(5, 4);
  CHECK(f54.edge_count() == 6);
  CHECK(count_cliques(f54, 3) == 2);
  Graph f74 = fnk(7, 4);
  CHECK(f74.edge_count() == 9);
  CHECK(circumference(f74) == 3);
  Graph single = fnk(4, 5);
  CHECK(single == testing_util::complete(4));
  for (auto shape : {BlockShape::path, BlockShape::star})
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 4}, {7, 4}, {9, 4}, {10, 5}, {13, 5}, {7, 3}}) {
      Graph g = fnk(n, k, shape);
      CHECK(Rational(static_cast<std::int64_t>(g.edge_count())) == eg_graph_bound(n, k));
      CHECK(circumference(g) == (k - 1 >= 3 ? k - 1 : 0));
      for (int r = 2; r <= k - 1; ++r)
        CHECK(Rational(static_cast<std::int64_t>(count_cliques(g, r))) == luo_bound(n, k, r));
    }
  CHECK_THROWS_AS(fnk(6, 4), Error);
  CHECK(to_string(BlockShape::star) == std::string("star"));
}

TEST_CASE("obstruction checker rejects false claims") {
  auto d7 = dirac_sharpness(7, 1);
  ObstructionCert wrong = *d7.obstruction;
  wrong.vertex = 0;
  CHECK(check_obstruction(d7.h, wrong) != "");
  Hypergraph k5(5, all_subsets(VertexSet::range(0, 5), 1));
  CHECK(check_obstruction(k5, ObstructionCert{ObstructionKind::cut_edge, std::nullopt, VertexSet::range(0, 5)}) != "");
  CHECK(check_obstruction(k5, ObstructionCert{ObstructionKind::component_size, std::nullopt, std::nullopt, {}, 4}) != "");
  CHECK(check_obstruction(k5, ObstructionCert{ObstructionKind::shadow_block_structure, std::nullopt, std::nullopt, {}, 4}) != "");
  ObstructionCert scarce{ObstructionKind::cross_pair_scarcity, std::nullopt, std::nullopt, S({0, 1, 2}), 0};
  CHECK(check_obstruction(k5, scarce) != "");
  CHECK(to_string(ObstructionKind::cut_vertex) == std::string("cut-vertex"));
}
