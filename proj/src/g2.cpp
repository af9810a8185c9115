#include "holocalc/g2.hpp"

#include <memory>

namespace holocalc::g2 {

namespace {

constexpr const char* kModule = "g2";
constexpr int kDim = 7;
constexpr Blade kFull = (Blade{1} << kDim) - 1;

Form standard_phi() {
  Form phi(kDim, 3);
  phi += Form::basis(kDim, {1, 2, 3});
  phi += Form::basis(kDim, {1, 4, 5});
  phi += Form::basis(kDim, {1, 6, 7});
  phi += Form::basis(kDim, {2, 4, 6});
  phi -= Form::basis(kDim, {2, 5, 7});
  phi -= Form::basis(kDim, {3, 4, 7});
  phi -= Form::basis(kDim, {3, 5, 6});
  return phi;
}

Matrix bilinear(const Form& phi) {
  std::vector<Form> contractions;
  for (int i = 1; i <= kDim; ++i) contractions.push_back(contract_basis(i, phi));
  Matrix b(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i; j < kDim; ++j) {
      const Form top = wedge(wedge(contractions[i], contractions[j]), phi);
      b(i, j) = b(j, i) = top.constant_coefficient(kFull);
    }
  return b;
}

struct Model {
  Form phi;
  Form psi;
  Scalar calibration;  // B_11 of the model form
  std::unique_ptr<G2Data> flat;
};

std::unique_ptr<Model>& model_slot() {
  static std::unique_ptr<Model> slot;
  return slot;
}

Model& model();

void install(const Form& phi) {
  if (phi.dim() != kDim || phi.degree() != 3 || !phi.is_constant())
    throw DomainError(kModule, "model 3-form must be a constant 3-form on R^7");
  auto m = std::make_unique<Model>();
  m->phi = phi;
  const Matrix b = bilinear(phi);
  m->calibration = b(0, 0);
  if (m->calibration == 0 || !(b.scaled(1 / m->calibration) == Matrix::identity(kDim)))
    throw DomainError(kModule, "model 3-form does not recover the Euclidean metric");
  m->psi = hodge_star(phi, Metric::euclidean(kDim));
  if (!(wedge(phi, m->psi) == Form::volume(kDim) * Scalar(7)))
    throw DomainError(kModule, "model 3-form is not normalized (φ∧∗φ must be 7 vol)");
  model_slot() = std::move(m);
  model_slot()->flat = std::make_unique<G2Data>(phi, model_slot()->psi);
}

Model& model() {
  // install() sets the slot before building the flat data, which calls back
  // here; so a plain check (not a function-local static) is required.
  if (!model_slot()) install(standard_phi());
  return *model_slot();
}

// Built during static initialization so later concurrent readers never race
// on the lazy check above.
const bool kModelReady = (model(), true);

// Coefficient vectors of a list of constant forms as matrix columns.
Matrix columns(const std::vector<Form>& forms, int n, int k) {
  const auto& bs = blades(n, k);
  Matrix m(bs.size(), forms.size());
  for (std::size_t c = 0; c < forms.size(); ++c) {
    const auto v = forms[c].to_vector();
    for (std::size_t r = 0; r < bs.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

Form column_form(const Matrix& m, std::size_t col, int n, int k) {
  std::vector<Scalar> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, col);
  return Form::from_vector(n, k, v);
}

// Matrix of the linear map x ↦ f(basis form x) from degree k forms.
template <class F>
Matrix linear_map(int k, int out_k, F f) {
  std::vector<Form> images;
  for (Blade b : blades(kDim, k)) images.push_back(f(Form::basis(kDim, b)));
  return columns(images, kDim, out_k);
}

// Projectors P·diag(block indicator)·P⁻¹ for a direct-sum basis P.
std::vector<Matrix> projectors(const Matrix& p, const std::vector<std::size_t>& sizes) {
  const auto inv = inverse(p);
  if (!inv) throw DomainError(kModule, "type spaces do not span (degenerate G2-structure)");
  std::vector<Matrix> out;
  std::size_t start = 0;
  for (auto size : sizes) {
    Matrix block(p.rows(), p.cols());
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = start; c < start + size; ++c) block(r, c) = p(r, c);
    out.push_back(block * *inv);
    start += size;
  }
  return out;
}

}  // namespace

const Form& phi0() { return model().phi; }
const Form& psi0() { return model().psi; }
void set_model_phi(const Form& phi) { install(phi); }
const Scalar& model_calibration() { return model().calibration; }
void reset_model_phi() { install(standard_phi()); }

RecoveredMetric metric_from_phi(const Form& phi) {
  if (phi.dim() != kDim || phi.degree() != 3) throw DomainError(kModule, "expected a 3-form on R^7");
  if (!phi.is_constant()) throw DomainError(kModule, "metric recovery needs constant coefficients (evaluate at a point first)");
  const Matrix b = bilinear(phi).scaled(1 / model().calibration);
  const Scalar det_b = determinant(b);
  if (det_b == 0) throw DomainError(kModule, "not a G2-structure at this point (degenerate 3-form)");
  // For φ = A^*φ₀ one has b = det(A)·AᵀA, so det b = det(A)^9.
  const auto root = exact_root(det_b, 9);
  if (!root) throw DomainError(kModule, "metric normalization needs the ninth root of " + det_b.get_str() + ", which is irrational");
  Matrix g = b.scaled(1 / *root);
  if (!is_positive_definite(g)) throw DomainError(kModule, "not a G2-structure at this point (indefinite bilinear form)");
  const int orientation = *root > 0 ? 1 : -1;
  Metric metric(std::move(g), orientation);
  Form vol = Form::basis(kDim, kFull, *root);
  return {std::move(metric), std::move(vol)};
}

G2Data::G2Data(const Form& phi) : phi_(phi) {
  auto rec = metric_from_phi(phi);
  metric_ = std::move(rec.metric);
  vol_ = std::move(rec.volume);
  psi_ = hodge_star(phi_, metric_);
  build_projectors();
}

G2Data::G2Data(const Form& phi, const Form& psi) : phi_(phi), psi_(psi) {
  auto rec = metric_from_phi(phi);
  metric_ = std::move(rec.metric);
  vol_ = std::move(rec.volume);
  if (!(hodge_star(phi_, metric_) == psi_)) throw DomainError(kModule, "supplied 4-form is not the dual of φ");
  build_projectors();
}

const G2Data& G2Data::flat() { return *model().flat; }

void G2Data::build_projectors() {
  // Λ²: 7-type spanned by e_i⌟φ; 14-type is the kernel of σ ↦ σ∧ψ.
  std::vector<Form> seven2;
  for (int i = 1; i <= kDim; ++i) seven2.push_back(contract_basis(i, phi_));
  const Matrix wedge_psi = linear_map(2, 6, [&](const Form& s) { return wedge(s, psi_); });
  basis2_14_ = null_space(wedge_psi);
  if (basis2_14_.cols() != 14) throw DomainError(kModule, "unexpected dimension of the 14-type");
  {
    const Matrix p = columns(seven2, kDim, 2).hcat(basis2_14_);
    auto pr = projectors(p, {7, 14});
    pi2_7_ = std::move(pr[0]);
    pi2_14_ = std::move(pr[1]);
  }
  // Λ³: span φ, span e_i⌟ψ, kernel of ρ ↦ (ρ∧φ, ρ∧ψ).
  std::vector<Form> seven3;
  for (int i = 1; i <= kDim; ++i) seven3.push_back(contract_basis(i, psi_));
  const Matrix wedge_phi = linear_map(3, 6, [&](const Form& r) { return wedge(r, phi_); });
  const Matrix wedge_psi3 = linear_map(3, 7, [&](const Form& r) { return wedge(r, psi_); });
  Matrix stacked(wedge_phi.rows() + wedge_psi3.rows(), wedge_phi.cols());
  for (std::size_t r = 0; r < wedge_phi.rows(); ++r)
    for (std::size_t c = 0; c < stacked.cols(); ++c) stacked(r, c) = wedge_phi(r, c);
  for (std::size_t r = 0; r < wedge_psi3.rows(); ++r)
    for (std::size_t c = 0; c < stacked.cols(); ++c) stacked(wedge_phi.rows() + r, c) = wedge_psi3(r, c);
  basis3_27_ = null_space(stacked);
  if (basis3_27_.cols() != 27) throw DomainError(kModule, "unexpected dimension of the 27-type");
  {
    const Matrix p = columns({phi_}, kDim, 3).hcat(columns(seven3, kDim, 3)).hcat(basis3_27_);
    auto pr = projectors(p, {1, 7, 27});
    pi3_1_ = std::move(pr[0]);
    pi3_7_ = std::move(pr[1]);
    pi3_27_ = std::move(pr[2]);
  }
}

Form apply(const Matrix& m, const Form& f, int out_degree) {
  const int n = f.dim();
  const auto& in = blades(n, f.degree());
  const auto& out_blades = blades(n, out_degree);
  if (m.cols() != in.size() || m.rows() != out_blades.size()) throw DomainError(kModule, "matrix does not match form type");
  Form out(n, out_degree);
  for (const auto& [b, p] : f.terms()) {
    const std::size_t c = blade_position(n, b);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) out.add_term(out_blades[r], p * m(r, c));
  }
  return out;
}

Split2 project2(const G2Data& g, const Form& sigma) {
  if (sigma.dim() != kDim || sigma.degree() != 2) throw DomainError(kModule, "project2 expects a 2-form on R^7");
  return {apply(g.pi2_7(), sigma, 2), apply(g.pi2_14(), sigma, 2)};
}

Split3 project3(const G2Data& g, const Form& rho) {
  if (rho.dim() != kDim || rho.degree() != 3) throw DomainError(kModule, "project3 expects a 3-form on R^7");
  return {apply(g.pi3_1(), rho, 3), apply(g.pi3_7(), rho, 3), apply(g.pi3_27(), rho, 3)};
}

Form rho_hat(const G2Data& g, const Form& rho) {
  const Split3 s = project3(g, rho);
  return hodge_star(s.p1 * make_scalar(4, 3) + s.p7 - s.p27, g.metric());
}

Form curl(const G2Data& g, const Form& gamma) {
  if (gamma.dim() != kDim || gamma.degree() != 1) throw DomainError(kModule, "curl expects a 1-form on R^7");
  return hodge_star(wedge(d(gamma), g.psi()), g.metric());
}

Form torsion_dphi(const G2Data& g, const TorsionClasses& t) {
  Form result = g.psi() * t.tau0;
  result += wedge(t.tau1, g.phi()) * Scalar(kTau1PhiCoefficient);
  result += hodge_star(t.tau3, g.metric());
  return result;
}

Form torsion_dpsi(const G2Data& g, const TorsionClasses& t) {
  Form result = wedge(t.tau1, g.psi()) * Scalar(4);
  result += wedge(t.tau2, g.phi());
  return result;
}

TorsionClasses torsion_from_derivatives(const G2Data& g, const Form& dphi, const Form& dpsi) {
  if (dphi.dim() != kDim || dphi.degree() != 4 || dpsi.dim() != kDim || dpsi.degree() != 5)
    throw DomainError(kModule, "torsion needs dφ (4-form) and dψ (5-form) on R^7");
  if (!dphi.is_constant() || !dpsi.is_constant()) throw DomainError(kModule, "torsion is computed pointwise; evaluate first");

  // dφ: unknowns (τ₀, τ₁ ∈ R^7, τ₃ coordinates in the 27-basis).
  std::vector<Form> cols;
  cols.push_back(g.psi());
  for (int i = 1; i <= kDim; ++i) cols.push_back(wedge(Form::basis(kDim, {i}), g.phi()) * Scalar(kTau1PhiCoefficient));
  for (std::size_t j = 0; j < g.basis3_27().cols(); ++j)
    cols.push_back(hodge_star(column_form(g.basis3_27(), j, kDim, 3), g.metric()));
  const auto x = solve(columns(cols, kDim, 4), dphi.to_vector());
  if (!x) throw DomainError(kModule, "dφ is not of the torsion form");

  // dψ: unknowns (τ₁ ∈ R^7, τ₂ coordinates in the 14-basis).
  std::vector<Form> cols5;
  for (int i = 1; i <= kDim; ++i) cols5.push_back(wedge(Form::basis(kDim, {i}), g.psi()) * Scalar(4));
  for (std::size_t j = 0; j < g.basis2_14().cols(); ++j)
    cols5.push_back(wedge(column_form(g.basis2_14(), j, kDim, 2), g.phi()));
  const auto y = solve(columns(cols5, kDim, 5), dpsi.to_vector());
  if (!y) throw DomainError(kModule, "dψ is not of the torsion form");

  TorsionClasses t{(*x)[0], Form(kDim, 1), Form(kDim, 2), Form(kDim, 3)};
  for (int i = 0; i < kDim; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if ((*x)[1 + idx] != (*y)[idx])
      throw DomainError(kModule, "the two recoveries of τ₁ disagree (input is not the torsion of a G2-structure)");
    t.tau1.add_term(Blade{1} << i, Poly(kDim, (*x)[1 + idx]));
  }
  for (std::size_t j = 0; j < g.basis3_27().cols(); ++j)
    t.tau3 += column_form(g.basis3_27(), j, kDim, 3) * (*x)[8 + j];
  for (std::size_t j = 0; j < g.basis2_14().cols(); ++j)
    t.tau2 += column_form(g.basis2_14(), j, kDim, 2) * (*y)[kDim + j];
  return t;
}

G2Field::G2Field(Frame frame) : frame_(std::move(frame)) {
  if (frame_.size() != kDim) throw DomainError(kModule, "frame must be 7×7");
  for (const auto& row : frame_)
    if (row.size() != kDim) throw DomainError(kModule, "frame must be 7×7");
  phi_ = pullback(phi0(), frame_);
  psi_ = pullback(psi0(), frame_);
}

G2Field G2Field::constant(const Form& phi) {
  G2Field f;
  f.phi_ = phi;
  f.psi_ = G2Data(phi).psi();
  return f;
}

G2Field G2Field::from_map(const std::vector<Poly>& map) {
  if (map.size() != kDim) throw DomainError(kModule, "map must have 7 components");
  Frame frame(kDim, std::vector<Poly>(kDim, Poly(kDim)));
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) frame[i][j] = map[i].derivative(static_cast<int>(j));
  return G2Field(std::move(frame));
}

G2Data G2Field::at(std::span<const Scalar> point) const {
  return G2Data(phi_.evaluate(point), psi_.evaluate(point));
}

TorsionClasses torsion_decompose(const G2Field& field, std::span<const Scalar> point) {
  const G2Data g = field.at(point);
  return torsion_from_derivatives(g, d(field.phi()).evaluate(point), d(field.psi()).evaluate(point));
}

DiracPair dirac_flat(const Poly& f, const Form& gamma) {
  const G2Data& g = G2Data::flat();
  const Form div = codifferential(gamma, g.metric());
  return {div.coefficient(0), d(Form::function(kDim, f)) + curl(g, gamma)};
}

Form dirac_flat_3form(const Poly& f, const Form& gamma) {
  const G2Data& g = G2Data::flat();
  const Form a = hodge_star(d(wedge(Form::function(kDim, f), g.phi())), g.metric());
  const Form b = d(hodge_star(wedge(gamma, g.psi()), g.metric()));
  const Split3 s = project3(g, a + b);
  return s.p1 + s.p7;
}

DiracPair dirac_iso_in(const Poly& f, const Form& gamma) { return {f, gamma * make_scalar(-1, 2)}; }

Form dirac_iso_out(const DiracPair& p) {
  const G2Data& g = G2Data::flat();
  Form out = wedge(Form::function(kDim, p.f), g.phi()) * make_scalar(6, 7);
  out += hodge_star(wedge(p.gamma, g.phi()), g.metric());
  return out;
}

}  // namespace holocalc::g2
