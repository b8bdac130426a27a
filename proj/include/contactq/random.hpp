// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "contactq/expression.hpp"

namespace contactq {

/// Deterministic RNG wrapper. The uniform mapping is spelled out so that
/// reports are reproducible independent of library distribution guts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform in [0,1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
  std::uint64_t seed_;
};

/// Random polynomial in the chart coordinates, degree <= max_degree,
/// coefficients in [-1,1]. Smooth everywhere, cheap to differentiate.
inline ScalarField random_polynomial(Rng& rng, int dim, int max_degree = 2, int terms = 4) {
  ScalarField f = ScalarField::constant(rng.uniform(-1.0, 1.0));
  for (int t = 0; t < terms; ++t) {
    ScalarField mono = ScalarField::constant(rng.uniform(-1.0, 1.0));
    const int deg = rng.uniform_int(1, max_degree);
    for (int d = 0; d < deg; ++d) {
      const int i = rng.uniform_int(0, dim - 1);
      mono = mono * ScalarField::coordinate(i);
    }
    f = f + mono;
  }
  return f;
}

/// Random trigonometric atom c * sin(x_i + phase) used on periodic charts.
inline ScalarField random_trig(Rng& rng, int dim) {
  const int i = rng.uniform_int(0, dim - 1);
  const double phase = rng.uniform(0.0, 6.283185307179586);
  return rng.uniform(-1.0, 1.0) * sin(ScalarField::coordinate(i) + phase);
}

}  // namespace contactq
