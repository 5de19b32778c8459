#pragma once

// Exhaustive and seeded-random checks of the extremal statements. Any
// counterexample would point at a bug in the oracles.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "berge/hypercore.hpp"

namespace berge {

enum class TheoremId { thm4, thm5, thm6, lemma5G, erdosBound, egGraph, luoCliques, dirac };

const char* to_string(TheoremId id) noexcept;
std::optional<TheoremId> theorem_from_string(const std::string& s);

enum class VerifyMode { exhaustive, random };

const char* to_string(VerifyMode m) noexcept;

struct VerifyParams {
  int n = 0;
  int k = 0;                 // thm4, thm5, thm6, egGraph, luoCliques
  std::optional<int> d;      // erdosBound; all valid d when absent
  std::optional<int> r;      // luoCliques; all 1 <= r <= k-1 when absent
  VerifyMode mode = VerifyMode::exhaustive;
  std::uint64_t trials = 1000;  // random mode
  std::uint64_t seed = 1;
  double p = 0.5;            // inclusion probability in random mode
  int jobs = 1;
  bool allow_large = false;  // lift the envelope
};

struct VerifyReport {
  TheoremId theorem = TheoremId::thm4;
  VerifyParams params;
  std::string reduction;                 // stated restriction of the instance space
  std::uint64_t instances_scanned = 0;   // every enumerated or sampled instance
  std::uint64_t instances_checked = 0;   // those meeting the hypothesis
  std::optional<std::string> counterexample;  // .bhg text
  std::optional<std::int64_t> extremum;  // largest count seen among hypothesis instances
  std::optional<std::string> bound;      // exact bound compared against
  bool attained = false;                 // extremum equals the bound

  bool passed() const { return !counterexample.has_value(); }
};

VerifyReport verify_theorem(TheoremId id, const VerifyParams& params);

/// Calls fn on every downset of subsets of [n] (including the empty family);
/// stops early if fn returns false. Returns the number visited.
std::uint64_t for_each_downset(int n, const std::function<bool(const Hypergraph&)>& fn);

/// Deterministic per-instance seed.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

/// Random hypergraph on n vertices keeping each subset of size >= 2 with
/// probability p, resampled until the minimum degree reaches min_deg.
Hypergraph random_hypergraph(int n, double p, std::size_t min_deg, std::uint64_t seed,
                             int max_attempts = 100000);

}  // namespace berge
