#pragma once

#include "holocalc/form.hpp"

namespace holocalc::seifert {

/// Chart R^n × S^1 with connection θ = dt + a. Invariant forms are written in
/// the adapted coframe (e^1..e^n, θ), in which g = g_B + θ² is constant.
class FiberedChart {
 public:
  FiberedChart(Metric base_metric, Form a);
  static FiberedChart flat(int n);

  int base_dim() const { return g_b_.dim(); }
  const Metric& base_metric() const { return g_b_; }
  const Form& connection() const { return a_; }
  /// dθ = da, a basic 2-form.
  const Form& curvature() const { return da_; }
  /// diag(g_B, 1) in the adapted coframe, oriented by θ∧vol_B.
  const Metric& total_metric() const { return g_; }

 private:
  Metric g_b_;
  Form a_;
  Form da_;
  Metric g_;
};

/// γ = θ∧α + β with α, β base forms. For degree 0 α is absent; for degree
/// n+1 β is absent (both then stored as default-constructed empty forms).
class InvariantForm {
 public:
  InvariantForm(int n, int k);
  InvariantForm(int n, int k, Form alpha, Form beta);
  static InvariantForm basic(const Form& beta);
  /// θ∧α.
  static InvariantForm vertical(const Form& alpha);

  int base_dim() const { return n_; }
  int degree() const { return k_; }
  const Form& alpha() const { return alpha_; }
  const Form& beta() const { return beta_; }
  bool is_basic() const { return alpha_.is_zero(); }
  bool is_zero() const { return alpha_.is_zero() && beta_.is_zero(); }

  InvariantForm& operator+=(const InvariantForm& rhs);
  InvariantForm& operator-=(const InvariantForm& rhs);
  friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
  friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
  InvariantForm operator-() const;
  bool operator==(const InvariantForm& rhs) const = default;

 private:
  int n_;
  int k_;
  Form alpha_;
  Form beta_;
};

/// Form on the (n+1)-dimensional adapted coframe with e^{n+1} = θ.
Form to_total(const InvariantForm& g);
InvariantForm from_total(int n, const Form& f);

/// ξ⌟γ = α (as a basic form).
Form fiber_contract(const InvariantForm& g);
/// Exterior derivative on the total space.
InvariantForm exterior_d(const FiberedChart& c, const InvariantForm& g);
InvariantForm theta_wedge(const InvariantForm& g);
/// b ∧ γ for a basic form b.
InvariantForm basic_wedge(const Form& b, const InvariantForm& g);
/// Hodge star of the total metric.
InvariantForm total_star(const FiberedChart& c, const InvariantForm& g);
/// Codifferential of the total space, (−1)^{N(k−1)+1} ∗_M d ∗_M with N = n+1.
InvariantForm total_codiff(const FiberedChart& c, const InvariantForm& g);

/// dγ − dθ∧(ξ⌟γ).
InvariantForm adapted_d(const FiberedChart& c, const InvariantForm& g);
/// ∗_M(θ∧β) for basic β.
Form transverse_star(const FiberedChart& c, const Form& beta);
/// (−1)^{n(k−1)+1} ∗ d ∗ β with the transverse star.
Form adapted_codiff(const FiberedChart& c, const Form& beta);
/// d*_M β − (−1)^{k(n+1−k)} θ∧∗_M(dθ∧∗_M β), evaluated on the total space.
InvariantForm adapted_codiff_total(const FiberedChart& c, const Form& beta);

}  // namespace holocalc::seifert
