#pragma once

#include "holocalc/g2.hpp"
#include "holocalc/shadow.hpp"

namespace holocalc::spin7 {

/// Circle-invariant data (θ, h, φ, ε) on R^7 × S^1. The 8-chart uses the
/// coordinate coframe (dx1..dx7, dt); forms on it have index 8 = dt.
/// h = w³ with w a positive polynomial, so h^{1/3} = w and h^{2/3} = w².
struct Spin7Triple {
  Form a;                   // θ = theta_scale·dt + a
  Scalar theta_scale = 1;   // 1 for a connection form; ε for the rescaled one
  Poly w;
  g2::G2Field phi;
  Scalar eps = 1;

  Spin7Triple(Form a_, Poly w_, g2::G2Field phi_, Scalar eps_ = 1);
  static Spin7Triple flat();

  Form theta() const;        // on the 8-chart
  Form curvature() const;    // dθ = da on R^7
  Poly h() const { return w * w * w; }
};

/// εθ∧φ + h^{2/3}ψ on the 8-chart.
Form assemble_phi(const Spin7Triple& t);

/// h^{1/3} g_B + ε²h^{−1}θ² at a point, in the coframe (e¹..e⁷, θ), oriented
/// by θ∧vol_B.
Metric metric(const Spin7Triple& t, std::span<const Scalar> point);

struct Residual {
  Form first;   // dφ
  Form second;  // d(h^{2/3}ψ) + ε dθ∧φ
  bool is_zero() const { return first.is_zero() && second.is_zero(); }
};
Residual gh_residual(const Spin7Triple& t);

/// d(3/2·h^{2/3}) + ∗(dθ∧ψ), the 1-form equivalent of the 6-form residual.
/// Needs a constant-metric φ (the star of a genuinely varying metric is only
/// available pointwise, see the overload).
Form monopole_residual(const Spin7Triple& t);
Form monopole_residual(const Spin7Triple& t, std::span<const Scalar> point);

/// ξ = (φ, h = w³, κ) ↦ d(h^{2/3}ψ) + κ∧φ; requires dφ = 0 and dκ = 0.
struct Xi {
  g2::G2Field phi;
  Poly w;
  Form kappa;
};
Form psi_map(const Xi& xi);

/// ζ = (ρ, f, κ) at the base point (φ₀, 1, 0).
struct Perturbation {
  Form rho;
  Poly f;
  Form kappa;
  Perturbation operator+(const Perturbation& o) const { return {rho + o.rho, f + o.f, kappa + o.kappa}; }
  Perturbation operator*(const Scalar& s) const { return {rho * s, f * s, kappa * s}; }
  static Perturbation zero() { return {Form(7, 3), Poly(7), Form(7, 2)}; }
};

/// d(ρ̂ + (2/3) f ψ₀) + κ∧φ₀
Form linearize(const Perturbation& z);

/// Infinitesimal deformation with f₀ = 0: ρ₀ has linear coefficients,
/// dρ₀ = 0 and dρ̂₀ = ∗κ₀; θ₀ = dt + a₀ with da₀ = κ₀.
struct Infinitesimal {
  Form rho0;
  Form a0;
  Form kappa0;
};
Infinitesimal solve_infinitesimal(const Form& kappa0);

/// Both sides of Ψ(ξ₀+εζ₀) = d(Q(ερ₀)) + ε²dθ₀∧ρ₀ with the common d(Q(ερ₀))
/// term removed; equality of these exact forms is the identity.
struct ErrorIdentity {
  Form lhs_known;  // d(ψ₀ + ερ̂₀) + εκ₀∧(φ₀ + ερ₀)
  Form rhs_known;  // ε²κ₀∧ρ₀
};
ErrorIdentity error_identity(const Infinitesimal& z, const Scalar& eps);

// ---- floating shadow -----------------------------------------------------

/// Ψ(φ, h, κ) at a point for polynomial φ (3-form), positive polynomial h
/// (any, not necessarily a cube) and κ; ψ is recovered numerically from φ.
shadow::Dense psi_map_shadow(const Form& phi, const Poly& h, const Form& kappa, std::span<const double> point);

/// Ψ(ξ₀ + tζ) at a point.
shadow::Dense perturbed_psi_map(const Perturbation& z, double t, std::span<const double> point);

/// N₀(ζ) = Ψ(ξ₀+ζ) − L₀(ζ) at a point (Ψ(ξ₀) = 0).
shadow::Dense nonlinear_remainder(const Perturbation& z, std::span<const double> point);

/// Q_{φ₀}(ρ) = ψ(φ₀+ρ) − ψ₀ − ρ̂ for a constant 3-form ρ.
shadow::Dense quadratic_term(const Form& rho, double t);

/// gh residuals at a point for general positive h (floating).
struct ShadowResidual {
  shadow::Dense first;
  shadow::Dense second;
};
ShadowResidual gh_residual_shadow(const Form& a, const Poly& h, const Form& phi, double eps, std::span<const double> point);

}  // namespace holocalc::spin7
