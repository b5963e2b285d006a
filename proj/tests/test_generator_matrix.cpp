#include <doctest.h>

#include "krongraph/errors.hpp"
#include "krongraph/generator_matrix.hpp"
#include "krongraph/presets.hpp"
#include "krongraph/rng.hpp"

using namespace krongraph;

TEST_SUITE("generator_matrix") {

TEST_CASE("accepts the graph500 matrix") {
  const GeneratorMatrix t = validate_generator(0.57, 0.19, 0.19, 0.05);
  CHECK(t.t1 == 0.57);
  CHECK(t.t4 == 0.05);
}

TEST_CASE("accepts the uniform matrix") {
  CHECK_NOTHROW(validate_generator(0.25, 0.25, 0.25, 0.25));
}

TEST_CASE("rejects a sum of two") {
  try {
    validate_generator(0.5, 0.5, 0.5, 0.5);
    FAIL("expected SumNotOneError");
  } catch (const SumNotOneError& e) {
    CHECK(e.actual_sum() == doctest::Approx(2.0));
  }
}

TEST_CASE("rejects negative entries before the sum check") {
  CHECK_THROWS_AS(validate_generator(-0.1, 0.5, 0.3, 0.3), NegativeEntryError);
  CHECK_THROWS_AS(validate_generator(0.5, 0.5, 0.5, -0.5), NegativeEntryError);
}

TEST_CASE("rejects a sum just outside tolerance, accepts inside") {
  CHECK_THROWS_AS(validate_generator(0.25, 0.25, 0.25, 0.25 + 1e-10), SumNotOneError);
  CHECK_NOTHROW(validate_generator(0.25, 0.25, 0.25, 0.25 + 1e-13));
}

TEST_CASE("ratio condition holds for a both-ratios-two matrix at loose tolerance") {
  const GeneratorMatrix t = validate_generator(0.4, 0.2, 0.266667, 0.133333);
  CHECK(check_ratio_condition(t, 1e-5));
}

TEST_CASE("ratio condition fails for graph500") {
  // t1*t4 = 0.0285 vs t2*t3 = 0.0361
  const GeneratorMatrix t = validate_generator(0.57, 0.19, 0.19, 0.05);
  CHECK_FALSE(check_ratio_condition(t, 1e-5));
}

TEST_CASE("ratio condition holds for uniform") {
  const GeneratorMatrix t = validate_generator(0.25, 0.25, 0.25, 0.25);
  CHECK(check_ratio_condition(t, 1e-12));
}

TEST_CASE("ratio condition needs t2 and t4 positive") {
  CHECK_THROWS_AS(check_ratio_condition(GeneratorMatrix{0.5, 0.0, 0.4, 0.1}, 1e-9),
                  DegenerateMatrixError);
  CHECK_THROWS_AS(check_ratio_condition(GeneratorMatrix{0.5, 0.3, 0.2, 0.0}, 1e-9),
                  DegenerateMatrixError);
}

TEST_CASE("exactly constructed ratio matrices pass at 1e-12") {
  // t1 = a^2*b*t4, t2 = a*t4, t3 = a*b*t4 gives t1/t2 = t3/t4 = a*b.
  RandomStream rng(7, 1);
  for (int trial = 0; trial < 25; ++trial) {
    const double a = 0.2 + 2.5 * rng.next_double();
    const double b = 0.2 + 2.5 * rng.next_double();
    const double t4 = 1.0 / (a * a * b + a + a * b + 1.0);
    const GeneratorMatrix t{a * a * b * t4, a * t4, a * b * t4, t4};
    CHECK(check_ratio_condition(t, 1e-12));
  }
}

TEST_CASE("every builtin preset passes validation") {
  for (const Preset& preset : builtin_presets()) {
    CAPTURE(preset.name);
    CHECK_NOTHROW(validate_generator(preset.generator.t1, preset.generator.t2,
                                     preset.generator.t3, preset.generator.t4));
  }
}

}  // TEST_SUITE
