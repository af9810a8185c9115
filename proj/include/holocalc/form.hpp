#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holocalc/linalg.hpp"
#include "holocalc/poly.hpp"
#include "holocalc/scalar.hpp"

namespace holocalc {

/// Set of coframe indices as a bitmask: bit i stands for e^{i+1}. Storing
/// the sorted index tuple this way makes the canonical form implicit.
using Blade = std::uint32_t;

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

int blade_degree(Blade b);
std::vector<int> blade_indices(Blade b);  // 1-based, ascending
Blade blade_from_indices(std::span<const int> indices);  // 1-based, any order, no repeats

/// Sign of e^a ∧ e^b relative to e^{a∪b}; zero when a and b overlap.
int wedge_sign(Blade a, Blade b);

/// All degree-k blades of R^n in lexicographic order of their index tuples.
const std::vector<Blade>& blades(int n, int k);

/// Position of a blade inside blades(n, k).
std::size_t blade_position(int n, Blade b);

/// Alternating k-form on a flat n-dimensional chart with polynomial
/// coefficients.
class Form {
 public:
  using Terms = std::map<Blade, Poly>;

  Form() = default;
  Form(int n, int k);

  static Form zero(int n, int k) { return Form(n, k); }
  static Form function(int n, const Poly& f);
  static Form constant(int n, const Scalar& c);
  /// sign * e^{indices} with 1-based indices in any order.
  static Form basis(int n, std::initializer_list<int> indices, const Scalar& coeff = 1);
  static Form basis(int n, Blade blade, const Scalar& coeff = 1);
  static Form basis(int n, Blade blade, const Poly& coeff);
  /// The volume blade e^1 ∧ ... ∧ e^n.
  static Form volume(int n) { return basis(n, (Blade{1} << n) - 1); }
  static Form from_vector(int n, int k, std::span<const Scalar> coeffs);

  int dim() const { return n_; }
  int degree() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Coefficient of a blade (zero polynomial when absent).
  Poly coefficient(Blade b) const;
  Scalar constant_coefficient(Blade b) const;

  void add_term(Blade b, const Poly& p);

  Form& operator+=(const Form& rhs);
  Form& operator-=(const Form& rhs);
  Form& operator*=(const Scalar& s);
  Form& operator*=(const Poly& p);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& s) { return a *= s; }
  friend Form operator*(const Scalar& s, Form a) { return a *= s; }
  friend Form operator*(const Poly& p, Form a) { return a *= p; }
  Form operator-() const { return *this * Scalar(-1); }

  bool operator==(const Form& rhs) const { return n_ == rhs.n_ && k_ == rhs.k_ && terms_ == rhs.terms_; }

  /// Coefficients in the order of blades(n, k); requires constant coefficients.
  std::vector<Scalar> to_vector() const;

  Form evaluate(std::span<const Scalar> point) const;

  /// Same form viewed on R^m, m ≥ n, using the first n coframe slots.
  Form lifted(int m) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  int k_ = 0;
  Terms terms_;
};

/// Constant Riemannian metric on a flat chart together with an orientation.
class Metric {
 public:
  Metric() = default;
  Metric(Matrix g, int orientation = 1);

  static Metric euclidean(int n, int orientation = 1);
  static Metric diagonal(std::span<const Scalar> entries, int orientation = 1);

  int dim() const { return static_cast<int>(g_.rows()); }
  const Matrix& matrix() const { return g_; }
  const Matrix& inverse() const { return inv_; }
  const Scalar& det() const { return det_; }
  int orientation() const { return orientation_; }
  /// √det when it is rational; otherwise the volume factor is only known
  /// symbolically through det().
  const std::optional<Scalar>& sqrt_det() const { return sqrt_det_; }
  bool is_diagonal() const { return diagonal_; }

  /// Signed volume form s·√det·e^{1..n}.
  Form volume_form() const;

  /// Induced inner product of two blades, det of the inverse-metric minor.
  Scalar blade_inner(Blade a, Blade b) const;

 private:
  Matrix g_;
  Matrix inv_;
  Scalar det_;
  std::optional<Scalar> sqrt_det_;
  int orientation_ = 1;
  bool diagonal_ = true;
};

Form wedge(const Form& a, const Form& b);
/// Interior product of a vector field (components along ∂_1..∂_n).
Form contract(std::span<const Poly> v, const Form& a);
/// Interior product with the coordinate vector ∂_index (1-based).
Form contract_basis(int index, const Form& a);
Form hodge_star(const Form& a, const Metric& g);
Form d(const Form& a);
/// (−1)^{n(k−1)+1} ⋆ d ⋆ on a flat chart.
Form codifferential(const Form& a, const Metric& g);
/// Pointwise inner product ⟨a, b⟩_g as a polynomial.
Poly inner(const Form& a, const Form& b, const Metric& g);

/// 1-form g(v, ·) for a constant vector.
Form flat(std::span<const Scalar> v, const Metric& g);
Form flat(std::span<const Poly> v, const Metric& g);
/// Vector field dual to a 1-form.
std::vector<Poly> sharp(const Form& a, const Metric& g);

/// Pullback of a form along the coframe substitution e^i ↦ Σ_j A_ij e^j
/// where A has polynomial entries (A is given row-major, n×n).
Form pullback(const Form& a, const std::vector<std::vector<Poly>>& frame);

}  // namespace holocalc
