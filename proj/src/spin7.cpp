#include "holocalc/spin7.hpp"

namespace holocalc::spin7 {

namespace {

constexpr const char* kModule = "spin7";
constexpr int kBase = 7;
constexpr int kTotal = 8;

Form lift(const Form& f) { return f.lifted(kTotal); }

Scalar positive_w(const Poly& w, std::span<const Scalar> point) {
  const Scalar v = w.evaluate(point);
  if (v <= 0) throw DomainError(kModule, "h must be positive at the evaluation point");
  return v;
}

// Columns: x_i e^b for each 3-blade b and coordinate i, ordered (blade, i).
// Rows: the 4-form dρ followed by the 5-form dρ̂.
// Rebuilt when the model 3-form changes.
const Matrix& infinitesimal_system() {
  static Form built_for;
  static Matrix m;
  if (m.rows() && built_for == g2::phi0()) return m;
  built_for = g2::phi0();
  const g2::G2Data& g = g2::G2Data::flat();
  const auto& b3 = blades(kBase, 3);
  const std::size_t rows4 = blades(kBase, 4).size();
  const std::size_t rows5 = blades(kBase, 5).size();
  m = Matrix(rows4 + rows5, b3.size() * kBase);
  for (std::size_t bi = 0; bi < b3.size(); ++bi)
    for (int i = 0; i < kBase; ++i) {
      const std::size_t col = bi * kBase + static_cast<std::size_t>(i);
      const Form rho = Form::basis(kBase, b3[bi], Poly::variable(kBase, i));
      const auto v4 = d(rho).to_vector();
      const auto v5 = d(g2::rho_hat(g, rho)).to_vector();
      for (std::size_t r = 0; r < rows4; ++r) m(r, col) = v4[r];
      for (std::size_t r = 0; r < rows5; ++r) m(rows4 + r, col) = v5[r];
    }
  return m;
}

double calibration() { return g2::model_calibration().get_d(); }

Form exact_scaled(const Form& f, double t) { return f * Scalar(t); }

}  // namespace

Spin7Triple::Spin7Triple(Form a_, Poly w_, g2::G2Field phi_, Scalar eps_)
    : a(std::move(a_)), w(std::move(w_)), phi(std::move(phi_)), eps(std::move(eps_)) {
  if (a.dim() != kBase || a.degree() != 1) throw DomainError(kModule, "connection term must be a 1-form on R^7");
  if (w.is_zero()) throw DomainError(kModule, "h must be positive");
  if (eps < 0) throw DomainError(kModule, "ε must be nonnegative");
}

Spin7Triple Spin7Triple::flat() {
  return Spin7Triple(Form(kBase, 1), Poly(kBase, 1), g2::G2Field::constant(g2::phi0()));
}

Form Spin7Triple::theta() const { return Form::basis(kTotal, {8}, theta_scale) + lift(a); }

Form Spin7Triple::curvature() const { return d(a); }

Form assemble_phi(const Spin7Triple& t) {
  Form out = wedge(t.theta(), lift(t.phi.phi())) * t.eps;
  out += lift((t.w * t.w) * t.phi.psi());
  return out;
}

Metric metric(const Spin7Triple& t, std::span<const Scalar> point) {
  const Scalar w = positive_w(t.w, point);
  const g2::G2Data g = t.phi.at(point);
  Matrix m(kTotal, kTotal);
  for (std::size_t i = 0; i < kBase; ++i)
    for (std::size_t j = 0; j < kBase; ++j) m(i, j) = w * g.metric().matrix()(i, j);
  m(kBase, kBase) = t.eps * t.eps / (w * w * w);
  // θ∧vol_B = (−1)^7 vol_B∧θ.
  return Metric(std::move(m), -g.metric().orientation());
}

Residual gh_residual(const Spin7Triple& t) {
  Residual r{d(t.phi.phi()), d((t.w * t.w) * t.phi.psi())};
  r.second += wedge(t.curvature(), t.phi.phi()) * t.eps;
  return r;
}

Form monopole_residual(const Spin7Triple& t) {
  if (!t.phi.phi().is_constant()) throw DomainError(kModule, "symbolic monopole residual needs a constant G2-structure");
  const g2::G2Data g(t.phi.phi(), t.phi.psi());
  Form out = d(Form::function(kBase, t.w * t.w * make_scalar(3, 2)));
  out += hodge_star(wedge(t.curvature(), g.psi()), g.metric());
  return out;
}

Form monopole_residual(const Spin7Triple& t, std::span<const Scalar> point) {
  positive_w(t.w, point);
  const g2::G2Data g = t.phi.at(point);
  Form out = d(Form::function(kBase, t.w * t.w * make_scalar(3, 2))).evaluate(point);
  out += hodge_star(wedge(t.curvature().evaluate(point), g.psi()), g.metric());
  return out;
}

Form psi_map(const Xi& xi) {
  if (!d(xi.phi.phi()).is_zero()) throw DomainError(kModule, "Ψ needs a closed 3-form φ");
  if (xi.kappa.dim() != kBase || xi.kappa.degree() != 2) throw DomainError(kModule, "κ must be a 2-form on R^7");
  if (!d(xi.kappa).is_zero()) throw DomainError(kModule, "Ψ needs a closed 2-form κ");
  if (xi.w.is_zero()) throw DomainError(kModule, "h must be positive");
  return d((xi.w * xi.w) * xi.phi.psi()) + wedge(xi.kappa, xi.phi.phi());
}

Form linearize(const Perturbation& z) {
  const g2::G2Data& g = g2::G2Data::flat();
  Form inner_form = g2::rho_hat(g, z.rho);
  inner_form += (z.f * make_scalar(2, 3)) * g.psi();
  return d(inner_form) + wedge(z.kappa, g.phi());
}

Infinitesimal solve_infinitesimal(const Form& kappa0) {
  const g2::G2Data& g = g2::G2Data::flat();
  if (kappa0.dim() != kBase || kappa0.degree() != 2 || !kappa0.is_constant())
    throw DomainError(kModule, "κ₀ must be a constant 2-form on R^7");
  if (!(hodge_star(kappa0, g.metric()) == -wedge(kappa0, g.phi())))
    throw DomainError(kModule, "κ₀ is not of type 14 (∗κ₀ ≠ −κ₀∧φ₀)");

  const Matrix& m = infinitesimal_system();
  const auto& b3 = blades(kBase, 3);
  const std::size_t rows4 = blades(kBase, 4).size();
  const std::size_t rows5 = blades(kBase, 5).size();
  std::vector<Scalar> rhs(rows4 + rows5);
  const auto star_kappa = hodge_star(kappa0, g.metric()).to_vector();
  for (std::size_t r = 0; r < rows5; ++r) rhs[rows4 + r] = star_kappa[r];
  const auto x = solve(m, rhs);
  if (!x) throw DomainError(kModule, "linear system for ρ₀ is inconsistent");

  Infinitesimal out{Form(kBase, 3), Form(kBase, 1), kappa0};
  for (std::size_t bi = 0; bi < b3.size(); ++bi)
    for (int i = 0; i < kBase; ++i) {
      const Scalar& c = (*x)[bi * kBase + static_cast<std::size_t>(i)];
      if (c != 0) out.rho0.add_term(b3[bi], Poly::variable(kBase, i) * c);
    }
  // a₀ = ½ Σ_{i<j} k_ij (x_i e^j − x_j e^i)
  for (const auto& [b, p] : kappa0.terms()) {
    const auto idx = blade_indices(b);
    const Scalar half = p.constant_term() / 2;
    out.a0.add_term(Blade{1} << (idx[1] - 1), Poly::variable(kBase, idx[0] - 1) * half);
    out.a0.add_term(Blade{1} << (idx[0] - 1), Poly::variable(kBase, idx[1] - 1) * Scalar(-half));
  }
  return out;
}

ErrorIdentity error_identity(const Infinitesimal& z, const Scalar& eps) {
  const g2::G2Data& g = g2::G2Data::flat();
  Form lhs = d(g.psi() + g2::rho_hat(g, z.rho0) * eps);
  lhs += wedge(z.kappa0 * eps, g.phi() + z.rho0 * eps);
  return {lhs, wedge(z.kappa0, z.rho0) * (eps * eps)};
}

shadow::Dense psi_map_shadow(const Form& phi, const Poly& h, const Form& kappa, std::span<const double> point) {
  using shadow::Jet;
  const auto jets = shadow::seeded(point);
  const std::span<const Jet> jp(jets);
  const auto phi_j = shadow::evaluate<Jet>(phi, jp);
  const auto psi_j = shadow::dual_form(phi_j, calibration());
  const Jet hv = h.evaluate_as<Jet>(jp);
  if (!(hv.value() > 0)) throw DomainError(kModule, "h must be positive at the evaluation point");
  using std::pow;
  const Jet h23 = pow(hv, 2.0 / 3.0);
  shadow::Dense out = shadow::exterior_d(psi_j * h23);
  out += shadow::wedge(shadow::evaluate(kappa, point), shadow::values(phi_j));
  return out;
}

shadow::Dense perturbed_psi_map(const Perturbation& z, double t, std::span<const double> point) {
  const Form phi = g2::phi0() + exact_scaled(z.rho, t);
  const Poly h = Poly(kBase, 1) + z.f * Scalar(t);
  return psi_map_shadow(phi, h, exact_scaled(z.kappa, t), point);
}

shadow::Dense nonlinear_remainder(const Perturbation& z, std::span<const double> point) {
  return perturbed_psi_map(z, 1.0, point) - shadow::evaluate(linearize(z), point);
}

shadow::Dense quadratic_term(const Form& rho, double t) {
  if (!rho.is_constant()) throw DomainError(kModule, "Q is evaluated on constant 3-forms");
  const shadow::Dense phi = shadow::from_exact(g2::phi0() + exact_scaled(rho, t));
  shadow::Dense q = shadow::dual_form(phi, calibration());
  q -= shadow::from_exact(g2::psi0());
  q -= shadow::from_exact(g2::rho_hat(g2::G2Data::flat(), rho)) * t;
  return q;
}

ShadowResidual gh_residual_shadow(const Form& a, const Poly& h, const Form& phi, double eps, std::span<const double> point) {
  using shadow::Jet;
  const auto jets = shadow::seeded(point);
  const std::span<const Jet> jp(jets);
  const auto phi_j = shadow::evaluate<Jet>(phi, jp);
  const Jet hv = h.evaluate_as<Jet>(jp);
  if (!(hv.value() > 0)) throw DomainError(kModule, "h must be positive at the evaluation point");
  using std::pow;
  const Jet h23 = pow(hv, 2.0 / 3.0);
  ShadowResidual r{shadow::exterior_d(phi_j), shadow::exterior_d(shadow::dual_form(phi_j, calibration()) * h23)};
  r.second += shadow::wedge(shadow::evaluate(d(a), point), shadow::values(phi_j)) * eps;
  return r;
}

}  // namespace holocalc::spin7
