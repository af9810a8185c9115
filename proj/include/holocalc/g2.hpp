#pragma once

#include <vector>

#include "holocalc/form.hpp"

namespace holocalc::g2 {

/// e123 + e145 + e167 + e246 − e257 − e347 − e356
const Form& phi0();
/// ∗φ₀ for the Euclidean metric.
const Form& psi0();

/// φ₀ unless overridden (the CLI config may install another model 3-form;
/// it must recover the Euclidean metric).
void set_model_phi(const Form& phi);
/// B_11 of the model form; the normalization constant of metric recovery.
const Scalar& model_calibration();
void reset_model_phi();

/// Metric and volume form determined by a constant 3-form on R^7.
struct RecoveredMetric {
  Metric metric;
  Form volume;
};

/// B(u,v)·vol = (u⌟φ)∧(v⌟φ)∧φ, normalized against the model form so that
/// the model recovers the identity. Throws when φ is degenerate or the
/// normalization needs an irrational ninth root.
RecoveredMetric metric_from_phi(const Form& phi);

/// Pointwise G2-structure with cached type projectors.
class G2Data {
 public:
  /// φ must have constant coefficients.
  explicit G2Data(const Form& phi);
  /// φ with a known dual form (skips recovery of ψ, still checks it).
  G2Data(const Form& phi, const Form& psi);
  static const G2Data& flat();

  const Form& phi() const { return phi_; }
  const Form& psi() const { return psi_; }
  const Form& volume() const { return vol_; }
  const Metric& metric() const { return metric_; }

  // Projector matrices acting on coefficient vectors in blades(7, k) order.
  const Matrix& pi2_7() const { return pi2_7_; }
  const Matrix& pi2_14() const { return pi2_14_; }
  const Matrix& pi3_1() const { return pi3_1_; }
  const Matrix& pi3_7() const { return pi3_7_; }
  const Matrix& pi3_27() const { return pi3_27_; }
  /// Bases (as columns) of the 14- and 27-dimensional types.
  const Matrix& basis2_14() const { return basis2_14_; }
  const Matrix& basis3_27() const { return basis3_27_; }

 private:
  void build_projectors();

  Form phi_;
  Form psi_;
  Form vol_;
  Metric metric_;
  Matrix pi2_7_, pi2_14_, pi3_1_, pi3_7_, pi3_27_;
  Matrix basis2_14_, basis3_27_;
};

/// Applies a constant matrix to the coefficient vector of a form; works for
/// polynomial coefficients too.
Form apply(const Matrix& m, const Form& f, int out_degree);

struct Split2 {
  Form p7;
  Form p14;
};
struct Split3 {
  Form p1;
  Form p7;
  Form p27;
};

Split2 project2(const G2Data& g, const Form& sigma);
Split3 project3(const G2Data& g, const Form& rho);

/// ∗(4/3 π₁ρ + π₇ρ − π₂₇ρ)
Form rho_hat(const G2Data& g, const Form& rho);

/// ∗(dγ∧ψ)
Form curl(const G2Data& g, const Form& gamma);

/// Torsion at a point. τ₂ lies in the 14-type, τ₃ in the 27-type.
struct TorsionClasses {
  Scalar tau0;
  Form tau1;
  Form tau2;
  Form tau3;
  bool is_zero() const { return tau0 == 0 && tau1.is_zero() && tau2.is_zero() && tau3.is_zero(); }
  bool operator==(const TorsionClasses&) const = default;
};

/// Coefficient of τ₁∧φ in dφ (see README: the value consistent with the
/// dψ display is 3).
inline constexpr int kTau1PhiCoefficient = 3;

/// τ₀ψ + 3τ₁∧φ + ∗τ₃
Form torsion_dphi(const G2Data& g, const TorsionClasses& t);
/// 4τ₁∧ψ + τ₂∧φ
Form torsion_dpsi(const G2Data& g, const TorsionClasses& t);
/// Solves the two displays for the classes; throws when the two τ₁
/// recoveries disagree.
TorsionClasses torsion_from_derivatives(const G2Data& g, const Form& dphi, const Form& dpsi);

/// Field of G2-structures φ = A^*φ₀, ψ = A^*ψ₀ for a polynomial frame A
/// (e^i ↦ Σ_j A_ij e^j); the metric is AᵀA. Both forms are exact
/// polynomials.
class G2Field {
 public:
  using Frame = std::vector<std::vector<Poly>>;

  explicit G2Field(Frame frame);
  /// Constant structure: ψ from metric recovery.
  static G2Field constant(const Form& phi);
  /// Frame = Jacobian of a polynomial map R^7 → R^7, so φ and ψ are closed.
  static G2Field from_map(const std::vector<Poly>& map);

  const Form& phi() const { return phi_; }
  const Form& psi() const { return psi_; }
  const Frame& frame() const { return frame_; }
  bool has_frame() const { return !frame_.empty(); }

  G2Data at(std::span<const Scalar> point) const;

 private:
  G2Field() = default;
  Frame frame_;
  Form phi_;
  Form psi_;
};

TorsionClasses torsion_decompose(const G2Field& field, std::span<const Scalar> point);

/// (f, γ) ↦ (d*γ, df + curl γ) on the flat structure.
struct DiracPair {
  Poly f;
  Form gamma;
  bool operator==(const DiracPair&) const = default;
};
DiracPair dirac_flat(const Poly& f, const Form& gamma);
/// (f, γ) ↦ π_{1⊕7}(∗d(fφ) + d∗(γ∧ψ)) on the flat structure.
Form dirac_flat_3form(const Poly& f, const Form& gamma);
/// Identification of Ω⁰⊕Ω¹ with Ω³_{1⊕7} under which the two operators
/// agree: dirac_flat_3form(f, γ) = dirac_iso_out(dirac_flat(dirac_iso_in(f, γ))).
DiracPair dirac_iso_in(const Poly& f, const Form& gamma);
Form dirac_iso_out(const DiracPair& p);

}  // namespace holocalc::g2
