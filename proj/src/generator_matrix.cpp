#include "krongraph/generator_matrix.hpp"

#include <cmath>
#include <string>

#include "krongraph/errors.hpp"

namespace krongraph {

GeneratorMatrix validate_generator(double t1, double t2, double t3, double t4) {
  const double entries[4] = {t1, t2, t3, t4};
  for (int i = 0; i < 4; ++i) {
    if (!(entries[i] >= 0.0)) {  // also rejects NaN
      throw NegativeEntryError("generator entry t" + std::to_string(i + 1) + " = " +
                               std::to_string(entries[i]) + " is negative");
    }
  }
  const double sum = t1 + t2 + t3 + t4;
  if (std::abs(sum - 1.0) > kGeneratorSumTolerance) {
    throw SumNotOneError("generator entries sum to " + std::to_string(sum) + ", expected 1", sum);
  }
  return GeneratorMatrix{t1, t2, t3, t4};
}

bool check_ratio_condition(const GeneratorMatrix& t, double tol) {
  if (t.t2 == 0.0 || t.t4 == 0.0) {
    throw DegenerateMatrixError("ratio condition undefined: t2 or t4 is zero");
  }
  return std::abs(t.t1 * t.t4 - t.t2 * t.t3) <= tol;
}

}  // namespace krongraph
