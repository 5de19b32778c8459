#pragma once

// Constructive hamiltonian Berge cycles for hypergraphs above the Dirac-type
// degree threshold, and the degree certificate extracted from a best path.

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/graph_ham.hpp"
#include "berge/hypercore.hpp"
#include "berge/reduction.hpp"

namespace berge {

/// Smallest minimum degree that forces a hamiltonian Berge cycle for n >= 15:
/// 2^((n-1)/2) + 1 for odd n, 2^(n/2-1) + 2 for even n.
std::uint64_t dirac_threshold(int n);

enum class PipelineBranch { g_hamiltonian, classified_repair };

const char* to_string(PipelineBranch b) noexcept;

struct PipelineOptions {
  /// Accept 13 <= n < 15. The degree threshold is still enforced.
  bool allow_small = false;
  /// Randomizes choice points of the repair step instead of canonical order.
  std::optional<std::uint64_t> choice_seed;
};

struct Reassignment {
  VertexSet edge;
  VertexPair from;
  VertexPair to;

  friend bool operator==(const Reassignment&, const Reassignment&) = default;
};

struct RepairPlan {
  SwapPlan swap;
  std::vector<Reassignment> reassignments;
};

struct PipelineTrace {
  MatchingMap matching;
  Graph g;
  PipelineBranch branch = PipelineBranch::g_hamiltonian;
  std::optional<ClassWitness> witness;
  std::optional<SwapPlan> plan;
  MatchingMap final_matching;
  BergeCertificate lifted_cycle;
};

PipelineTrace constructive_hamiltonian_berge_cycle(const Hypergraph& h, PipelineOptions opts = {});

/// Finishes the construction from a given matching phi of h without checking
/// the degree threshold. Requires the extracted graph to have minimum degree
/// at least floor((n-1)/2) and n >= 13.
PipelineTrace complete_from_matching(const Hypergraph& h, const MatchingMap& phi,
                                     PipelineOptions opts = {});

/// Plan that moves one or two hyperedges of phi onto missing pairs of h's
/// shadow so that the swapped graph is hamiltonian. Throws theorem_violation
/// when no qualifying hyperedge exists.
RepairPlan repair_plan_for(const Hypergraph& h, const MatchingMap& phi, const Graph& g,
                           const ClassWitness& w, std::optional<std::uint64_t> choice_seed = {});

// ---------------------------------------------------------------------------

struct VarphiEntry {
  VertexSet edge;
  VertexSet image;

  friend bool operator==(const VarphiEntry&, const VarphiEntry&) = default;
};

struct DegreeCertificate {
  int k = 0;
  BergeCertificate path;             // a best Berge path
  VertexSet w;                       // its first k-1 base vertices
  std::optional<VertexSet> excluded; // e_{k-1}, when the path has k-1 edges
  std::vector<VarphiEntry> varphi;   // edges at v1 other than e_{k-1}, into subsets of W at v1
  std::size_t degree_v1 = 0;
  bool v1_in_excluded = false;
};

/// Either a certificate or, when some edge at v1 reaches past W, a Berge cycle
/// of length >= k formed by that edge and the start of the path.
struct DegreeCertificateOutcome {
  std::optional<DegreeCertificate> certificate;
  std::optional<BergeCertificate> long_cycle;
};

/// Requires k >= 3 and min degree >= 2^(k-2) + 1. Every step is verified and
/// a failed check throws theorem_violation.
DegreeCertificateOutcome best_path_degree_certificate(const Hypergraph& h, int k);

/// Independent re-check of a certificate's stated properties against h.
/// Returns an empty string when all hold.
std::string check_degree_certificate(const Hypergraph& h, const DegreeCertificate& cert);

}  // namespace berge
