#include "krongraph/raster.hpp"

#include <bit>
#include <string>

#include "krongraph/errors.hpp"

namespace krongraph {

std::vector<std::vector<std::uint64_t>> spy_raster(const EdgeList& edges, VertexId n,
                                                   std::uint64_t resolution) {
  if (resolution == 0 || resolution > n || !std::has_single_bit(resolution) ||
      !std::has_single_bit(n)) {
    throw InvalidParamsError("raster needs power-of-two n and resolution with resolution <= n");
  }
  const int shift = std::countr_zero(n) - std::countr_zero(resolution);
  std::vector<std::vector<std::uint64_t>> grid(
      resolution, std::vector<std::uint64_t>(resolution, 0));
  for (const Edge& e : edges) {
    if (e.source >= n || e.sink >= n) {
      throw InvalidParamsError("edge (" + std::to_string(e.source) + ", " +
                               std::to_string(e.sink) + ") out of range for n = " +
                               std::to_string(n));
    }
    ++grid[e.source >> shift][e.sink >> shift];
  }
  return grid;
}

}  // namespace krongraph
