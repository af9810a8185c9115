#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holocalc/scalar.hpp"

namespace holocalc::spectral {

/// p + q√d with rational p, q and a positive integer d (square factors
/// below 10⁶ are pulled out; d = 1 only when q = 0).
class Surd {
 public:
  Surd() : d_(1) {}
  Surd(const Scalar& p) : p_(p), d_(1) {}  // NOLINT: rationals are surds
  Surd(const Scalar& p, const Scalar& q, const mpz_class& d);

  /// √x for a rational x ≥ 0.
  static Surd sqrt(const Scalar& x);

  const Scalar& rational_part() const { return p_; }
  const Scalar& surd_coefficient() const { return q_; }
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return q_ == 0; }

  friend Surd operator+(const Surd& a, const Scalar& b) { return Surd(a.p_ + b, a.q_, a.d_); }
  friend Surd operator*(const Surd& a, const Scalar& b) { return Surd(a.p_ * b, a.q_ * b, a.d_); }

  /// Exact sign of a − b.
  friend int compare(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) { return compare(a, b) == 0; }
  friend bool operator<(const Surd& a, const Surd& b) { return compare(a, b) < 0; }

  double to_double() const;
  std::string to_string() const;

 private:
  Scalar p_;
  Scalar q_;
  mpz_class d_;
};

/// Roots of λ(λ + m − 2) = δ, the rates of homogeneous harmonic functions
/// r^λ u on a cone of dimension m over a link eigenfunction Δu = δu.
/// Returned as (λ₊, λ₋).
std::pair<Surd, Surd> indicial_roots_functions(const Scalar& delta, int m);

struct Interval {
  Scalar lo;
  Scalar hi;
  bool is_empty() const { return lo >= hi; }
  bool operator==(const Interval&) const = default;
};

/// Rate windows for basic k-forms on a cone over an n-dimensional link.
struct ExcludedWindows {
  /// No harmonic k-forms with rate strictly inside (k ≤ n/2 − 1).
  std::optional<Interval> harmonic;
  /// No closed and coclosed k-forms with rate strictly inside (k < n/2).
  std::optional<Interval> closed_coclosed;
  /// Rate at which harmonic forms are automatically closed and coclosed
  /// (−k when k ≤ n/2 − 1 or k = n/2).
  std::optional<Scalar> harmonic_is_closed_at;
  /// Only rate where log r terms can appear: −n/2 − 1.
  Scalar log_rate;
  /// Windows obtained from degree n − k.
  bool mirrored = false;
  bool operator==(const ExcludedWindows&) const = default;
};
ExcludedWindows excluded_window(int k, int n);

struct IndicialDatum {
  Surd lambda;
  int multiplicity = 1;
};

/// Σ of multiplicities of the roots strictly inside (ν, ν′).
int index_jump(const std::vector<IndicialDatum>& roots, const Surd& nu, const Surd& nu_prime);

struct CohomologyInput {
  int n = 0;
  int k = 0;
  long compact = 0;        // dim H^k_c(B)
  long absolute = 0;       // dim H^k(B)
  long to_boundary = 0;    // dim im(H^k(B) → H^k(Σ))
  long compact_image = 0;  // dim im(H^k_c(B) → H^k(B))
};

struct L2Dimensions {
  long minus = 0;  // rate −k − δ
  long plus = 0;   // rate −k + δ
  bool operator==(const L2Dimensions&) const = default;
};

/// δ is symbolic: the answer does not depend on it once it is small.
L2Dimensions l2_cohomology(const CohomologyInput& c);
/// Variant that checks δ against the indicial roots of the k-form
/// Laplacian: −k must be the only root in [−k − δ, −k + δ].
L2Dimensions l2_cohomology(const CohomologyInput& c, const std::vector<IndicialDatum>& roots, const Scalar& delta);

}  // namespace holocalc::spectral
