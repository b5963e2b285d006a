#include "krongraph/eigenvalues.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "krongraph/errors.hpp"
#include "krongraph/rng.hpp"

namespace krongraph {

namespace {

using Vector = std::vector<double>;

void matvec(const Graph& g, const Vector& x, Vector& y) {
  for (VertexId v = 0; v < g.n; ++v) {
    double sum = 0.0;
    for (VertexId w : g.neighbors(v)) sum += x[w];
    y[v] = sum;
  }
}

double dot(const Vector& a, const Vector& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

void axpy(double alpha, const Vector& x, Vector& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

// Symmetric tridiagonal QL with implicit shifts (EISPACK tql2). diag/sub are
// overwritten; vectors comes in as identity and leaves holding eigenvectors
// in columns (vectors[row * m + col]). Eigenvalues end up ascending.
bool tridiagonal_eigen(std::vector<double>& diag, std::vector<double>& sub,
                       std::vector<double>& vectors) {
  const int m = static_cast<int>(diag.size());
  if (m == 0) return true;
  std::vector<double> e(diag.size(), 0.0);
  for (int i = 0; i + 1 < m; ++i) e[i] = sub[i];
  e[m - 1] = 0.0;

  const double eps = 0x1.0p-52;
  double f = 0.0;
  double tst1 = 0.0;
  for (int l = 0; l < m; ++l) {
    tst1 = std::max(tst1, std::abs(diag[l]) + std::abs(e[l]));
    int mm = l;
    while (mm < m && std::abs(e[mm]) > eps * tst1) ++mm;
    if (mm > l) {
      int iter = 0;
      do {
        if (++iter > 64) return false;
        double g = diag[l];
        double p = (diag[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        diag[l] = e[l] / (p + r);
        diag[l + 1] = e[l] * (p + r);
        const double dl1 = diag[l + 1];
        double h = g - diag[l];
        for (int i = l + 2; i < m; ++i) diag[i] -= h;
        f += h;

        p = diag[mm];
        double c = 1.0, c2 = c, c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = mm - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * diag[i] - s * g;
          diag[i + 1] = h + s * (c * g + s * diag[i]);
          for (int k = 0; k < m; ++k) {
            h = vectors[static_cast<std::size_t>(k) * m + i + 1];
            vectors[static_cast<std::size_t>(k) * m + i + 1] =
                s * vectors[static_cast<std::size_t>(k) * m + i] + c * h;
            vectors[static_cast<std::size_t>(k) * m + i] =
                c * vectors[static_cast<std::size_t>(k) * m + i] - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        diag[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    diag[l] += f;
    e[l] = 0.0;
  }

  // Selection-sort ascending, carrying columns along.
  for (int i = 0; i + 1 < m; ++i) {
    int kmin = i;
    for (int j = i + 1; j < m; ++j) {
      if (diag[j] < diag[kmin]) kmin = j;
    }
    if (kmin != i) {
      std::swap(diag[i], diag[kmin]);
      for (int row = 0; row < m; ++row) {
        std::swap(vectors[static_cast<std::size_t>(row) * m + i],
                  vectors[static_cast<std::size_t>(row) * m + kmin]);
      }
    }
  }
  return true;
}

struct RitzPair {
  double value = 0.0;
  double residual = 0.0;
  int column = 0;
};

struct LanczosRun {
  std::vector<Vector> basis;
  std::vector<double> ritz_values;      // all Ritz values of the run
  std::vector<double> tridiag_vectors;  // column i = coefficients of Ritz i
  std::vector<RitzPair> pairs;          // one per Ritz value, with residuals
};

void orthogonalize(Vector& w, const std::vector<Vector>& locked,
                   const std::vector<Vector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& u : locked) axpy(-dot(w, u), u, w);
    for (const Vector& u : basis) axpy(-dot(w, u), u, w);
  }
}

// One Lanczos sweep in the orthogonal complement of `locked`, with full
// reorthogonalization. Returns false only if the start vector had no mass
// left in the complement.
bool lanczos_sweep(const Graph& g, const std::vector<Vector>& locked, Vector start, int max_steps,
                   double breakdown_tol, LanczosRun& run) {
  orthogonalize(start, locked, run.basis);
  const double start_norm = norm(start);
  if (start_norm <= breakdown_tol) return false;
  for (double& x : start) x /= start_norm;

  std::vector<double> alpha, beta;
  run.basis.push_back(std::move(start));
  Vector w(g.n);
  double final_beta = 0.0;  // norm of the residual vector after the last step
  for (int j = 0; j < max_steps; ++j) {
    matvec(g, run.basis.back(), w);
    if (j > 0) axpy(-beta[j - 1], run.basis[j - 1], w);
    const double a = dot(w, run.basis[j]);
    axpy(-a, run.basis[j], w);
    alpha.push_back(a);
    orthogonalize(w, locked, run.basis);
    const double b = norm(w);
    if (j + 1 >= max_steps || b <= breakdown_tol) {
      final_beta = b <= breakdown_tol ? 0.0 : b;
      break;
    }
    beta.push_back(b);
    Vector next(w);
    for (double& x : next) x /= b;
    run.basis.push_back(std::move(next));
  }

  const int steps = static_cast<int>(alpha.size());
  std::vector<double> diag = alpha;
  std::vector<double> sub = beta;
  sub.resize(static_cast<std::size_t>(std::max(steps - 1, 0)), 0.0);
  run.tridiag_vectors.assign(static_cast<std::size_t>(steps) * steps, 0.0);
  for (int i = 0; i < steps; ++i) run.tridiag_vectors[static_cast<std::size_t>(i) * steps + i] = 1.0;
  if (!tridiagonal_eigen(diag, sub, run.tridiag_vectors)) {
    throw ConvergenceFailureError("tridiagonal QL iteration stalled", 0.0);
  }
  run.ritz_values = diag;

  for (int i = 0; i < steps; ++i) {
    RitzPair pair;
    pair.value = diag[i];
    pair.column = i;
    // |beta_m * s_{m,i}| bounds the Ritz pair's eigenvalue error.
    pair.residual = std::abs(
        final_beta * run.tridiag_vectors[static_cast<std::size_t>(steps - 1) * steps + i]);
    run.pairs.push_back(pair);
  }
  return true;
}

Vector ritz_vector(const LanczosRun& run, int column) {
  const int steps = static_cast<int>(run.ritz_values.size());
  Vector y(run.basis.front().size(), 0.0);
  for (int j = 0; j < steps; ++j) {
    axpy(run.tridiag_vectors[static_cast<std::size_t>(j) * steps + column], run.basis[j], y);
  }
  return y;
}

bool magnitude_order(double a, double b) {
  const double ma = std::abs(a), mb = std::abs(b);
  return ma != mb ? ma > mb : a > b;
}

// Magnitude-descending order with near-ties (1e-9 relative, e.g. the +/-
// sqrt(k) pair of a star) resolved by value descending.
void sort_by_magnitude(std::vector<double>& values) {
  std::sort(values.begin(), values.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  std::size_t group = 0;
  while (group < values.size()) {
    const double lead = std::abs(values[group]);
    std::size_t end = group + 1;
    while (end < values.size() &&
           lead - std::abs(values[end]) <= 1e-9 * std::max(1.0, lead)) {
      ++end;
    }
    std::sort(values.begin() + static_cast<std::ptrdiff_t>(group),
              values.begin() + static_cast<std::ptrdiff_t>(end), std::greater<>());
    group = end;
  }
}

}  // namespace

std::vector<double> top_eigenvalues(const Graph& g, int k, const EigenOptions& options) {
  if (k < 0 || static_cast<std::uint64_t>(k) > g.n) {
    throw InvalidParamsError("eigenvalue count " + std::to_string(k) +
                             " out of range for n = " + std::to_string(g.n));
  }
  if (k == 0) return {};

  const std::uint64_t n = g.n;
  std::vector<Vector> locked;
  std::vector<double> locked_values;
  double scale = 1.0;  // running spectral-norm estimate
  int stall_count = 0;
  double best_unconverged_residual = std::numeric_limits<double>::infinity();

  const int basis_cap = n > 65536 ? 160 : 400;

  for (int attempt = 0;; ++attempt) {
    const std::uint64_t remaining = n - locked.size();
    const int have = static_cast<int>(locked.size());

    if (have >= k) {
      sort_by_magnitude(locked_values);
      if (remaining == 0) break;
    } else if (remaining == 0) {
      break;  // k <= n guarantees this cannot happen before have >= k
    }

    if (stall_count > options.max_restarts) {
      throw ConvergenceFailureError(
          "eigenvalue iteration exhausted its restart budget; best residual " +
              std::to_string(best_unconverged_residual),
          best_unconverged_residual);
    }

    const int k_remaining = std::max(1, k - have);
    const int max_steps = static_cast<int>(std::min<std::uint64_t>(
        remaining,
        static_cast<std::uint64_t>(
            std::min(basis_cap, 2 * k_remaining + 30 + 20 * stall_count))));

    LanczosRun run;
    Vector start(n);
    RandomStream rng(options.seed, kEigenStreamBase + static_cast<std::uint64_t>(attempt));
    for (double& x : start) x = 2.0 * rng.next_double() - 1.0;
    const double breakdown_tol = 1e-13 * scale;
    if (!lanczos_sweep(g, locked, std::move(start), max_steps, breakdown_tol, run)) {
      ++stall_count;
      continue;
    }

    for (double theta : run.ritz_values) scale = std::max(scale, std::abs(theta));
    const double tol = options.residual_tolerance * scale;

    const double kth_magnitude =
        have >= k ? std::abs(locked_values[static_cast<std::size_t>(k) - 1]) : -1.0;

    std::vector<RitzPair> converged;
    double unlocked_bound = 0.0;
    bool any_unlocked = false;
    for (const RitzPair& pair : run.pairs) {
      if (pair.residual <= tol) {
        converged.push_back(pair);
      } else {
        best_unconverged_residual = std::min(best_unconverged_residual, pair.residual);
        unlocked_bound = std::max(unlocked_bound, std::abs(pair.value));
        any_unlocked = true;
      }
    }
    std::sort(converged.begin(), converged.end(), [](const RitzPair& a, const RitzPair& b) {
      return magnitude_order(a.value, b.value);
    });

    int locked_this_run = 0;
    for (const RitzPair& pair : converged) {
      const bool competitive =
          have + locked_this_run < k ||
          std::abs(pair.value) > kth_magnitude * (1.0 + 1e-10) + 1e-10 * scale;
      if (!competitive) {
        unlocked_bound = std::max(unlocked_bound, std::abs(pair.value));
        any_unlocked = true;
        continue;
      }
      Vector y = ritz_vector(run, pair.column);
      orthogonalize(y, locked, {});
      const double y_norm = norm(y);
      if (y_norm <= breakdown_tol) continue;  // collapsed onto locked space
      for (double& x : y) x /= y_norm;
      locked.push_back(std::move(y));
      locked_values.push_back(pair.value);
      ++locked_this_run;
    }

    if (locked_this_run > 0) {
      stall_count = 0;
      continue;
    }
    // No progress: if everything seen sits at or below the locked k-th
    // magnitude, the top-k set is complete.
    if (static_cast<int>(locked.size()) >= k && any_unlocked &&
        unlocked_bound <= kth_magnitude * (1.0 + 1e-10) + 1e-10 * scale) {
      break;
    }
    ++stall_count;
  }

  sort_by_magnitude(locked_values);
  locked_values.resize(static_cast<std::size_t>(std::min<std::uint64_t>(k, locked_values.size())));
  return locked_values;
}

}  // namespace krongraph
