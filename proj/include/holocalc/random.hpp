#pragma once

#include <cstdint>
#include <random>

#include "holocalc/form.hpp"

namespace holocalc {

/// Deterministic sampler for randomized identity checks. Draws come straight
/// from the raw mt19937_64 stream (std distributions are not portable across
/// standard libraries, and reports must be byte-identical for a seed).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  bool coin() { return (next() & 1u) != 0; }
  /// Small rational p/q with |p| ≤ num_bound, 1 ≤ q ≤ den_bound.
  Scalar rational(long num_bound = 5, long den_bound = 3);
  /// Nonzero variant of rational().
  Scalar nonzero_rational(long num_bound = 5, long den_bound = 3);
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Random polynomial in nvars variables with total degree ≤ max_degree.
  Poly poly(int nvars, int max_degree, int max_terms = 3);
  /// Random k-form on R^n; each blade is populated with probability ~density.
  Form form(int n, int k, int max_degree, double density = 0.4);
  Form constant_form(int n, int k, double density = 0.5);

 private:
  std::mt19937_64 engine_;
};

}  // namespace holocalc
