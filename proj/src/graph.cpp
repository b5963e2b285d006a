#include "krongraph/graph.hpp"

#include <algorithm>
#include <string>

#include "krongraph/errors.hpp"

namespace krongraph {

Graph symmetrize(const EdgeList& edges, VertexId n) {
  Graph g;
  g.n = n;
  g.offsets.assign(n + 1, 0);

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.source >= n || e.sink >= n) {
      throw InvalidParamsError("edge (" + std::to_string(e.source) + ", " +
                               std::to_string(e.sink) + ") out of range for n = " +
                               std::to_string(n));
    }
    if (e.source == e.sink) {
      ++g.self_loops_dropped;
      continue;
    }
    normalized.push_back(e.source < e.sink ? e : Edge{e.sink, e.source});
  }

  std::sort(normalized.begin(), normalized.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.sink < b.sink;
  });
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  g.edge_count = normalized.size();
  g.duplicates_dropped = edges.size() - g.self_loops_dropped - g.edge_count;

  for (const Edge& e : normalized) {
    ++g.offsets[e.source + 1];
    ++g.offsets[e.sink + 1];
  }
  for (VertexId v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];

  // Scanning (source, sink)-sorted edges appends every vertex's lower
  // neighbors in ascending order before its higher ones, so each list comes
  // out sorted.
  g.adjacency.resize(2 * g.edge_count);
  std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const Edge& e : normalized) {
    g.adjacency[cursor[e.source]++] = e.sink;
    g.adjacency[cursor[e.sink]++] = e.source;
  }
  return g;
}

DegreeSequence observed_degrees(const Graph& g) {
  DegreeSequence degrees;
  degrees.out_weights.resize(g.n);
  double total = 0.0;
  for (VertexId v = 0; v < g.n; ++v) {
    degrees.out_weights[v] = static_cast<double>(g.degree(v));
    total += degrees.out_weights[v];
  }
  degrees.in_weights = degrees.out_weights;
  degrees.total = total;  // 2 * edge_count
  return degrees;
}

}  // namespace krongraph
