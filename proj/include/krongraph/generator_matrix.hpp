#pragma once

namespace krongraph {

inline constexpr double kGeneratorSumTolerance = 1e-12;

// 2x2 quadrant matrix [t1 t2; t3 t4] with nonnegative entries summing to 1.
// Quadrants map to id bits as t1->(0,0), t2->(0,1), t3->(1,0), t4->(1,1).
struct GeneratorMatrix {
  double t1 = 0.25;
  double t2 = 0.25;
  double t3 = 0.25;
  double t4 = 0.25;

  // Per-level marginals of the descent: row picks the source bit, column the
  // sink bit.
  double row0() const noexcept { return t1 + t2; }
  double row1() const noexcept { return t3 + t4; }
  double col0() const noexcept { return t1 + t3; }
  double col1() const noexcept { return t2 + t4; }

  double sum() const noexcept { return t1 + t2 + t3 + t4; }
};

// Throws NegativeEntryError on any entry < 0 and SumNotOneError (carrying the
// actual sum) when the total is more than kGeneratorSumTolerance away from 1.
GeneratorMatrix validate_generator(double t1, double t2, double t3, double t4);

// True iff |t1*t4 - t2*t3| <= tol, the cross-multiplied form of
// t1/t2 = t3/t4. Throws DegenerateMatrixError when t2 = 0 or t4 = 0.
bool check_ratio_condition(const GeneratorMatrix& t, double tol);

}  // namespace krongraph
