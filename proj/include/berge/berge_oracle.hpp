#pragma once

// Exact exponential-time oracles for Berge paths and cycles. Intended for
// desk-scale inputs (n <= 16 unless OracleOptions::allow_large is set).

#include <cstddef>
#include <optional>

#include "berge/hypercore.hpp"

namespace berge {

inline constexpr int kOracleMaxVertices = 16;

struct OracleOptions {
  bool allow_large = false;
};

/// Ordering used to pick a "best" Berge path: more edges wins, then a smaller
/// total edge size.
struct PathOrderKey {
  std::size_t length = 0;
  std::size_t total_size = 0;

  bool better_than(const PathOrderKey& other) const {
    if (length != other.length) return length > other.length;
    return total_size < other.total_size;
  }
  friend bool operator==(const PathOrderKey&, const PathOrderKey&) = default;
};

PathOrderKey path_order_key(const BergeCertificate& path);

std::optional<BergeCertificate> longest_berge_cycle(const Hypergraph& h,
                                                    OracleOptions opts = {});
std::optional<BergeCertificate> longest_berge_path(const Hypergraph& h,
                                                   OracleOptions opts = {});
std::optional<BergeCertificate> best_berge_path(const Hypergraph& h,
                                                OracleOptions opts = {});
std::optional<BergeCertificate> hamiltonian_berge_cycle(const Hypergraph& h,
                                                        OracleOptions opts = {});

/// Some Berge cycle of length >= min_length, or nothing. Stops at the first
/// witness, so this is much cheaper than longest_berge_cycle for decisions.
std::optional<BergeCertificate> berge_cycle_at_least(const Hypergraph& h,
                                                     int min_length,
                                                     OracleOptions opts = {});
/// Some Berge path with >= min_vertices base vertices (and >= 1 edge).
std::optional<BergeCertificate> berge_path_at_least(const Hypergraph& h,
                                                    int min_vertices,
                                                    OracleOptions opts = {});

}  // namespace berge
