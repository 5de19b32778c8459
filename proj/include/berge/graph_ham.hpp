#pragma once

// Graph-side tools: exact hamiltonicity and circumference, clique counts,
// hamilton closure, dense hamiltonian-connectedness, the nonhamiltonian edge bound, and
// the five-class structure of dense nonhamiltonian graphs with its edge-swap
// repair.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/hypercore.hpp"

namespace berge {

inline constexpr int kHamiltonMaxVertices = 24;

struct HamiltonOptions {
  bool allow_large = false;
};

/// A hamiltonian cycle as a vertex order starting at vertex 0, or nothing.
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g, HamiltonOptions opts = {});
inline bool is_hamiltonian(const Graph& g, HamiltonOptions opts = {}) {
  return hamiltonian_cycle(g, opts).has_value();
}
/// A hamiltonian path from `from` to `to`, or nothing.
std::optional<std::vector<int>> hamiltonian_path(const Graph& g, int from, int to,
                                                 HamiltonOptions opts = {});

/// Length of a longest cycle; 0 for forests.
int circumference(const Graph& g, HamiltonOptions opts = {});
/// True if some cycle has length >= min_length (min_length >= 3).
bool has_cycle_at_least(const Graph& g, int min_length, HamiltonOptions opts = {});

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);

std::uint64_t count_cliques(const Graph& g, int r);

Graph bondy_chvatal_closure(const Graph& g);

/// Sufficient condition: e(G) >= C(n,2) - 2 and n >= 5.
bool hamiltonian_connected_by_density(const Graph& g);
/// Exact all-pairs hamiltonian path check (n <= 12).
bool is_hamiltonian_connected(const Graph& g);

/// h(n,d) = C(n-d, 2) + d^2 for 1 <= d <= floor((n-1)/2).
std::int64_t erdos_h(int n, int d);
/// e(n,d) = max{h(n,d), h(n, floor((n-1)/2))}.
std::int64_t erdos_bound(int n, int d);

// ---------------------------------------------------------------------------

enum class GraphClass { G1, G2, G3, G4, G5 };

const char* to_string(GraphClass c) noexcept;
std::optional<GraphClass> graph_class_from_string(const std::string& s);

struct ClassWitness {
  GraphClass cls = GraphClass::G1;
  VertexSet v1;
  VertexSet v2;
  std::optional<int> x0;
  std::optional<VertexPair> e0;
  int k = 0;

  friend bool operator==(const ClassWitness&, const ClassWitness&) = default;
};

/// How the "deg_G(v) >= k for every v" clause of G3 is read.
enum class DegreeScope {
  whole_graph,  // every vertex of G
  second_side,  // only vertices of V2
};

/// Checks every defining condition of the witness's class against g.
bool satisfies_class(const Graph& g, const ClassWitness& w,
                     DegreeScope g3_scope = DegreeScope::whole_graph);

struct ClassifyResult {
  std::vector<ClassWitness> witnesses;  // first match only unless all requested
  std::string not_applicable;           // reason when preconditions fail

  bool applicable() const { return not_applicable.empty(); }
  bool classified() const { return !witnesses.empty(); }
};

/// Matches g against G1..G5 in that order. Preconditions: k >= 3,
/// n in {2k+1, 2k+2}, min degree >= k, g not hamiltonian.
ClassifyResult classify_dense_nonhamiltonian(const Graph& g, int k, bool report_all = false,
                                             DegreeScope g3_scope = DegreeScope::whole_graph);

/// Same matching without the hamiltonicity and degree preconditions; used by
/// callers that have already established them.
std::vector<ClassWitness> match_classes(const Graph& g, int k, bool report_all,
                                        DegreeScope g3_scope = DegreeScope::whole_graph);

struct SwapPlan {
  std::vector<VertexPair> removed;
  std::vector<VertexPair> added;

  friend bool operator==(const SwapPlan&, const SwapPlan&) = default;
};

enum class SwapGuarantee { hamiltonian, exceptional };

struct SwapResult {
  Graph graph;
  SwapGuarantee guarantee = SwapGuarantee::hamiltonian;
};

/// Empty string when the plan has the shape required for the class, else why.
std::string swap_plan_shape_error(const Graph& g, const ClassWitness& w, const SwapPlan& plan);

/// True for the single G3 configuration in which the swap is not guaranteed
/// to produce a hamiltonian graph.
bool is_exceptional_swap(const Graph& g, const ClassWitness& w, const SwapPlan& plan);

/// Returns (E(G) \ removed) u added. Requires k >= 6 and a well-shaped plan.
SwapResult apply_swap(const Graph& g, const ClassWitness& w, const SwapPlan& plan);

}  // namespace berge
