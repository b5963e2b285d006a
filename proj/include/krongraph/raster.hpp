#pragma once

#include <cstdint>
#include <vector>

#include "krongraph/skg.hpp"

namespace krongraph {

// Insertion counts per (n/r) x (n/r) cell of the adjacency matrix, row-major;
// grid sums to the number of edges. Requires r a power of two with r <= n.
std::vector<std::vector<std::uint64_t>> spy_raster(const EdgeList& edges, VertexId n,
                                                   std::uint64_t resolution);

}  // namespace krongraph
