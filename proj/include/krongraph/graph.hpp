#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "krongraph/chung_lu.hpp"
#include "krongraph/skg.hpp"

namespace krongraph {

// Simple undirected graph in CSR form; neighbor lists sorted ascending, no
// self-loops, no duplicates.
struct Graph {
  VertexId n = 0;
  std::uint64_t edge_count = 0;  // undirected edges
  std::vector<std::uint64_t> offsets;
  std::vector<VertexId> adjacency;

  // Counts reported by symmetrize.
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency.data() + offsets[v], adjacency.data() + offsets[v + 1]};
  }
  std::uint64_t degree(VertexId v) const { return offsets[v + 1] - offsets[v]; }
};

// Treats every insertion (u,v) as the undirected edge {u,v}, drops
// self-loops, collapses duplicates, and records both counts.
Graph symmetrize(const EdgeList& edges, VertexId n);

// Observed degrees as both out- and in-weights; the CL fit of a real graph.
DegreeSequence observed_degrees(const Graph& g);

}  // namespace krongraph
