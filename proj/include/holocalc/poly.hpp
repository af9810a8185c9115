#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "holocalc/scalar.hpp"

namespace holocalc {

inline constexpr int kMaxVars = 8;

/// Exponent tuple of a monomial; entries past the polynomial's variable
/// count are always zero.
using Exponents = std::array<std::uint8_t, kMaxVars>;

/// Multivariate polynomial in chart coordinates x1..xn with exact rational
/// coefficients. Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponents, Scalar>;

  Poly() = default;
  explicit Poly(int nvars);
  Poly(int nvars, const Scalar& constant);

  static Poly variable(int nvars, int index);  // index is 0-based
  static Poly monomial(int nvars, const Exponents& exps, const Scalar& coeff);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int total_degree() const;

  void add_term(const Exponents& exps, const Scalar& coeff);

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  /// Equality ignores the declared variable count.
  bool operator==(const Poly& rhs) const { return terms_ == rhs.terms_; }

  /// Partial derivative with respect to the 0-based variable `index`.
  Poly derivative(int index) const;

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Evaluation in any ring that accepts double coefficients (double,
  /// autodiff scalars).
  template <class T>
  T evaluate_as(std::span<const T> point) const {
    T sum = T(0.0);
    for (const auto& [exps, coeff] : terms_) {
      T term = T(coeff.get_d());
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < exps[static_cast<std::size_t>(i)]; ++e) term = term * point[static_cast<std::size_t>(i)];
      sum = sum + term;
    }
    return sum;
  }

  /// Same polynomial viewed in more variables (the extra ones unused).
  Poly extended(int nvars) const;
  /// Same polynomial in fewer variables; throws if a dropped one is used.
  Poly restricted(int nvars) const;

  std::string to_string() const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

}  // namespace holocalc
