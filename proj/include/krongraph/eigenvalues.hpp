#pragma once

#include <cstdint>
#include <vector>

#include "krongraph/graph.hpp"

namespace krongraph {

struct EigenOptions {
  double residual_tolerance = 1e-9;  // scaled by the spectral-norm estimate
  int max_restarts = 64;
  std::uint64_t seed = 0;
};

// The k largest-magnitude eigenvalues of the 0/1 adjacency matrix, signs
// preserved, ordered by |value| descending; magnitudes within 1e-9 relative
// (degenerate clusters, +/- pairs) order by value descending. Lanczos on
// matrix-vector products with full reorthogonalization; converged Ritz pairs
// are locked and the iteration restarts in their orthogonal complement, so
// repeated eigenvalues are recovered with their multiplicity. Deterministic
// for a fixed options.seed. Requires k <= n; throws ConvergenceFailureError
// (with the achieved residual) if the restart budget runs out.
std::vector<double> top_eigenvalues(const Graph& g, int k, const EigenOptions& options = {});

}  // namespace krongraph
