#pragma once

// Deterministic extremal and sharpness families. Blocks occupy consecutive
// vertex indices and an apex vertex, when present, is the last vertex.

#include <cstddef>
#include <optional>
#include <string>

#include "berge/hypercore.hpp"

namespace berge {

enum class ObstructionKind {
  cut_vertex,             // deleting `vertex` disconnects the shadow
  cut_edge,               // deleting hyperedge `edge` disconnects the shadow
  cross_pair_scarcity,    // at most `bound` hyperedges meet `set` in >= 2 vertices,
                          // fewer than the 2|set|-n consecutive pairs any
                          // hamiltonian cyclic order puts inside `set`
  component_size,         // every shadow component has at most `bound` vertices
  shadow_block_structure, // every cycle of the shadow has length at most `bound`
};

const char* to_string(ObstructionKind k) noexcept;

struct ObstructionCert {
  ObstructionKind kind = ObstructionKind::cut_vertex;
  std::optional<int> vertex;
  std::optional<VertexSet> edge;
  VertexSet set;
  std::size_t bound = 0;
};

/// Empty string when the obstruction holds in h, else the reason it does not.
std::string check_obstruction(const Hypergraph& h, const ObstructionCert& cert);

struct Construction {
  Hypergraph h;
  std::optional<ObstructionCert> obstruction;
};

/// Variants 1 and 3 need odd n, variants 2 and 4 even n; n >= 5.
Construction dirac_sharpness(int n, int variant);
/// Disjoint complete hypergraphs (all nonempty subsets) on k-1 vertices.
Construction path_sharpness(int n, int k);
/// Variant 1: path_sharpness plus [n]. Variant 2: complete hypergraphs on
/// (k-1)-sets A_i plus the sets A_i u {x}.
Construction cycle_sharpness(int n, int k, int variant);
/// All sets A with A \ {x} inside some (k-2)-set A_i, including the empty set.
Construction eg_sharpness(int n, int k);

enum class BlockShape { path, star };

const char* to_string(BlockShape s) noexcept;

/// A graph whose blocks are all K_{k-1}, arranged as a path or a star.
Graph fnk(int n, int k, BlockShape shape = BlockShape::path);

}  // namespace berge
