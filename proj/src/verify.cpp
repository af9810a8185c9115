#include "holocalc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "holocalc/cones.hpp"
#include "holocalc/examples.hpp"
#include "holocalc/random.hpp"
#include "holocalc/seifert.hpp"
#include "holocalc/spectral.hpp"
#include "holocalc/spin7.hpp"

namespace holocalc::verify {

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  Outcome result(const std::string& extra = "") const {
    const std::string tail = extra.empty() ? "" : "; " + extra;
    if (failures_ == 0) return {true, std::to_string(cases_) + " cases" + tail};
    return {false, std::to_string(failures_) + "/" + std::to_string(cases_) + " failed; first: " + first_ + tail};
  }

 private:
  long cases_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string blade_name(Blade b) {
  std::string s = "e";
  for (int i : blade_indices(b)) s += std::to_string(i);
  return b ? s : "1";
}

// ---- exterior ---------------------------------------------------------------

Outcome exterior_star_contract(Rng&) {
  Tally t;
  for (int n = 2; n <= 7; ++n) {
    const Metric g = Metric::euclidean(n);
    const Form vol = g.volume_form();
    for (int k = 0; k <= n; ++k)
      for (Blade b : blades(n, k)) {
        const Form beta = Form::basis(n, b);
        const Form sb = hodge_star(beta, g);
        for (Blade a : blades(n, k)) {
          const Form alpha = Form::basis(n, a);
          t.check(wedge(alpha, sb) == inner(alpha, beta, g) * vol,
                  "n=" + std::to_string(n) + " " + blade_name(a) + "∧∗" + blade_name(b));
        }
      }
  }
  return t.result();
}

Outcome exterior_double_star(Rng&) {
  Tally t;
  for (int n = 2; n <= 8; ++n)
    for (int orientation : {1, -1}) {
      const Metric g = Metric::euclidean(n, orientation);
      for (int k = 0; k <= n; ++k)
        for (Blade b : blades(n, k)) {
          const Form beta = Form::basis(n, b);
          const Form twice = hodge_star(hodge_star(beta, g), g);
          t.check(twice == ((k * (n - k)) % 2 ? -beta : beta), "n=" + std::to_string(n) + " " + blade_name(b));
        }
    }
  return t.result();
}

Outcome exterior_d_squared(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 8));
    const int k = static_cast<int>(rng.integer(0, n - 2));
    const Form a = rng.form(n, k, 3);
    t.check(d(d(a)).is_zero(), "trial " + std::to_string(trial));
  }
  return t.result();
}

Outcome exterior_leibniz(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 8));
    const int ka = static_cast<int>(rng.integer(0, n - 1));
    const int kb = static_cast<int>(rng.integer(0, n - 1 - ka));
    const Form a = rng.form(n, ka, 3), b = rng.form(n, kb, 3);
    Form rhs = wedge(d(a), b);
    rhs += ka % 2 ? -wedge(a, d(b)) : wedge(a, d(b));
    t.check(d(wedge(a, b)) == rhs, "trial " + std::to_string(trial));
  }
  return t.result();
}

// ---- g2 -----------------------------------------------------------------------

Outcome g2_projector_ranks(Rng&) {
  const g2::G2Data& g = g2::G2Data::flat();
  Tally t;
  t.check(rank(g.pi2_7()) == 7, "rank π₇ on Λ²");
  t.check(rank(g.pi2_14()) == 14, "rank π₁₄ on Λ²");
  t.check(rank(g.pi3_1()) == 1, "rank π₁ on Λ³");
  t.check(rank(g.pi3_7()) == 7, "rank π₇ on Λ³");
  t.check(rank(g.pi3_27()) == 27, "rank π₂₇ on Λ³");
  return t.result("ranks (7,14) and (1,7,27)");
}

Outcome g2_projector_algebra(Rng& rng) {
  const g2::G2Data& g = g2::G2Data::flat();
  const Metric& eu = g.metric();
  Tally t;
  const std::vector<const Matrix*> two{&g.pi2_7(), &g.pi2_14()}, three{&g.pi3_1(), &g.pi3_7(), &g.pi3_27()};
  for (const auto* group : {&two, &three}) {
    const std::size_t dim = (*group)[0]->rows();
    Matrix sum(dim, dim);
    for (std::size_t i = 0; i < group->size(); ++i) {
      sum = sum + *(*group)[i];
      for (std::size_t j = 0; j < group->size(); ++j)
        t.check(*(*group)[i] * *(*group)[j] == (i == j ? *(*group)[i] : Matrix(dim, dim)), "projector products");
    }
    t.check(sum == Matrix::identity(dim), "completeness");
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Form sigma = rng.constant_form(7, 2);
    const g2::Split2 p = g2::project2(g, sigma);
    t.check(p.p7 + p.p14 == sigma, "2-form completeness");
    t.check(inner(p.p7, p.p14, eu).is_zero(), "2-form orthogonality");
    t.check(g2::project2(g, p.p14).p14 == p.p14, "2-form idempotence");
    const Form rho = rng.constant_form(7, 3);
    const g2::Split3 q = g2::project3(g, rho);
    t.check(q.p1 + q.p7 + q.p27 == rho, "3-form completeness");
    t.check(inner(q.p1, q.p7, eu).is_zero() && inner(q.p7, q.p27, eu).is_zero() && inner(q.p1, q.p27, eu).is_zero(),
            "3-form orthogonality");
    t.check(g2::project3(g, q.p27).p27 == q.p27 && g2::project3(g, q.p7).p7 == q.p7, "3-form idempotence");
  }
  return t.result();
}

Outcome g2_identity_contraction(Rng& rng) {
  const g2::G2Data& g = g2::G2Data::flat();
  const Metric& eu = g.metric();
  Tally t;
  for (int trial = 0; trial < 50; ++trial) {
    const Form gamma = rng.form(7, 1, 3, 0.6);
    const g2::Split3 s = g2::project3(g, d(contract(sharp(gamma, eu), g2::phi0())));
    const Form div = codifferential(gamma, eu);
    const Form cg = g2::curl(g, gamma);
    t.check(s.p1 == wedge(div, g2::phi0()) * make_scalar(-3, 7), "π₁d(X⌟φ)");
    t.check(s.p7 == hodge_star(wedge(cg, g2::phi0()), eu) * make_scalar(-1, 2), "π₇d(X⌟φ)");
  }
  return t.result();
}

Outcome g2_identity_codifferential(Rng& rng) {
  const g2::G2Data& g = g2::G2Data::flat();
  const Metric& eu = g.metric();
  Tally t;
  for (int trial = 0; trial < 50; ++trial) {
    const Form gamma = rng.form(7, 1, 3, 0.6);
    const Form lhs = d(hodge_star(wedge(gamma, g2::psi0()), eu)) - codifferential(wedge(gamma, g2::phi0()), eu);
    const Form cg = g2::curl(g, gamma);
    t.check(lhs == -hodge_star(wedge(cg, g2::phi0()), eu) - wedge(codifferential(gamma, eu), g2::phi0()), "d∗(γ∧ψ) − d*(γ∧φ)");
    t.check(g2::project3(g, lhs).p27.is_zero(), "no 27-component");
  }
  return t.result();
}

Form laplacian(const Form& f) {
  Form out(f.dim(), f.degree());
  for (const auto& [b, p] : f.terms()) {
    Poly lap(f.dim());
    for (int i = 0; i < f.dim(); ++i) lap -= p.derivative(i).derivative(i);
    out.add_term(b, lap);
  }
  return out;
}

Outcome g2_dirac(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 50; ++trial) {
    const Poly f = rng.poly(7, 3, 3);
    const Form gamma = rng.form(7, 1, 3, 0.6);
    const g2::DiracPair in = g2::dirac_iso_in(f, gamma);
    t.check(g2::dirac_flat_3form(f, gamma) == g2::dirac_iso_out(g2::dirac_flat(in.f, in.gamma)), "3-form identification");
    const g2::DiracPair once = g2::dirac_flat(f, gamma);
    const g2::DiracPair twice = g2::dirac_flat(once.f, once.gamma);
    t.check(Form::function(7, twice.f) == laplacian(Form::function(7, f)) && twice.gamma == laplacian(gamma),
            "Dirac squared is the Laplacian");
  }
  return t.result();
}

Outcome g2_torsion_round_trip(Rng& rng) {
  const g2::G2Data& g = g2::G2Data::flat();
  Tally t;
  t.check(g2::torsion_from_derivatives(g, Form(7, 4), Form(7, 5)).is_zero(), "flat structure");
  const std::vector<Scalar> origin(7);
  t.check(g2::torsion_decompose(g2::G2Field::constant(g2::phi0()), origin).is_zero(), "constant field");
  for (int trial = 0; trial < 20; ++trial) {
    const g2::TorsionClasses tc{rng.rational(), rng.constant_form(7, 1), g2::project2(g, rng.constant_form(7, 2)).p14,
                                g2::project3(g, rng.constant_form(7, 3)).p27};
    t.check(g2::torsion_from_derivatives(g, g2::torsion_dphi(g, tc), g2::torsion_dpsi(g, tc)) == tc,
            "trial " + std::to_string(trial));
  }
  return t.result();
}

// ---- seifert ------------------------------------------------------------------

Outcome seifert_codifferential(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 5));
    const seifert::FiberedChart c(Metric::euclidean(n), rng.form(n, 1, 2));
    const Form beta = rng.form(n, static_cast<int>(rng.integer(1, n)), 2);
    t.check(seifert::adapted_codiff_total(c, beta) == seifert::InvariantForm::basic(seifert::adapted_codiff(c, beta)),
            "trial " + std::to_string(trial));
  }
  return t.result();
}

Outcome seifert_transverse_star(Rng&) {
  Tally t;
  for (int n = 2; n <= 7; ++n) {
    const seifert::FiberedChart fc(Metric::euclidean(n), Poly::variable(n, 0) * Form::basis(n, {2}));
    for (int k = 0; k <= n; ++k)
      for (Blade b : blades(n, k)) {
        const Form beta = Form::basis(n, b);
        seifert::InvariantForm rhs = seifert::InvariantForm::vertical(seifert::transverse_star(fc, beta));
        if (k % 2) rhs = -rhs;
        t.check(seifert::total_star(fc, seifert::InvariantForm::basic(beta)) == rhs,
                "n=" + std::to_string(n) + " " + blade_name(b));
      }
  }
  return t.result();
}

Outcome seifert_adapted_d(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 5));
    const seifert::FiberedChart c(Metric::euclidean(n), rng.form(n, 1, 2));
    const Form beta = rng.form(n, static_cast<int>(rng.integer(0, n - 1)), 3);
    const seifert::InvariantForm out = seifert::adapted_d(c, seifert::InvariantForm::basic(beta));
    t.check(out.is_basic() && out.beta() == d(beta), "trial " + std::to_string(trial));
  }
  return t.result();
}

// ---- spin7 --------------------------------------------------------------------

g2::G2Field closed_field(Rng& rng) {
  std::vector<Poly> map;
  for (int i = 0; i < 7; ++i) map.push_back(Poly::variable(7, i) * Scalar(2) + rng.poly(7, 2, 2) * make_scalar(1, 10));
  return g2::G2Field::from_map(map);
}

g2::G2Field frame_field(Rng& rng) {
  std::vector<std::vector<Poly>> frame(7, std::vector<Poly>(7, Poly(7)));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      frame[i][j] = (i == j ? Poly(7, 2) : Poly(7)) + Poly::variable(7, static_cast<int>(rng.integer(0, 6))) * rng.rational(1, 4);
  return g2::G2Field(frame);
}

Poly small_w(Rng& rng) { return Poly(7, 1) + rng.poly(7, 1, 2) * make_scalar(1, 10); }

spin7::Perturbation closed_perturbation(Rng& rng, const Scalar& scale) {
  return spin7::Perturbation{d(rng.form(7, 2, 2, 0.3)), rng.poly(7, 2, 3), d(rng.form(7, 1, 2, 0.5))} * scale;
}

Form kappa_basis(std::size_t j) {
  const g2::G2Data& g = g2::G2Data::flat();
  const auto& b2 = blades(7, 2);
  Form kappa(7, 2);
  for (std::size_t r = 0; r < b2.size(); ++r)
    if (g.basis2_14()(r, j) != 0) kappa.add_term(b2[r], Poly(7, g.basis2_14()(r, j)));
  return kappa;
}

Outcome spin7_self_pairing(Rng&) {
  Tally t;
  const spin7::Spin7Triple flat = spin7::Spin7Triple::flat();
  const Form phi = spin7::assemble_phi(flat);
  const Metric g = spin7::metric(flat, std::vector<Scalar>(7));
  t.check(wedge(phi, phi) == g.volume_form() * Scalar(14), "Φ∧Φ = 14 vol");
  return t.result();
}

Outcome spin7_residuals(Rng& rng) {
  Tally t;
  t.check(spin7::gh_residual(spin7::Spin7Triple::flat()).is_zero(), "flat triple");
  for (int trial = 0; trial < 30; ++trial) {
    const g2::G2Field field = trial % 3 == 0 ? frame_field(rng) : closed_field(rng);
    const spin7::Spin7Triple tr(rng.form(7, 1, 2, 0.5), small_w(rng), field, abs(rng.rational(3, 3) * rng.rational(3, 3)));
    const spin7::Residual res = spin7::gh_residual(tr);
    const Form dphi = d(spin7::assemble_phi(tr));
    t.check(dphi == res.second.lifted(8) - wedge(tr.theta(), res.first.lifted(8)) * tr.eps,
            "dΦ against the residuals, trial " + std::to_string(trial));
    t.check(tr.eps == 0 || dphi.is_zero() == res.is_zero(), "closedness equivalence, trial " + std::to_string(trial));
  }
  return t.result();
}

Outcome spin7_eps_scaling(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 10; ++trial) {
    const Scalar pos = abs(rng.nonzero_rational(3, 4) * rng.nonzero_rational(3, 4));
    const spin7::Spin7Triple tr(rng.form(7, 1, 2, 0.5), small_w(rng), closed_field(rng), pos);
    spin7::Spin7Triple scaled(tr.a * pos, tr.w, tr.phi, 1);
    scaled.theta_scale = pos;
    const spin7::Residual a = spin7::gh_residual(tr), b = spin7::gh_residual(scaled);
    t.check(a.first == b.first && a.second == b.second, "trial " + std::to_string(trial));
  }
  return t.result();
}

Outcome spin7_linearity(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 20; ++trial) {
    const spin7::Perturbation a{rng.form(7, 3, 2, 0.2), rng.poly(7, 2), rng.form(7, 2, 2, 0.3)};
    const spin7::Perturbation b{rng.form(7, 3, 2, 0.2), rng.poly(7, 2), rng.form(7, 2, 2, 0.3)};
    const Scalar s = rng.rational();
    t.check(spin7::linearize(a + b * s) == spin7::linearize(a) + spin7::linearize(b) * s, "trial " + std::to_string(trial));
  }
  return t.result();
}

Outcome spin7_derivative_slope(Rng& rng) {
  Tally t;
  const std::array<double, 7> origin{};
  std::string slopes;
  for (int trial = 0; trial < 5; ++trial) {
    const spin7::Perturbation z = closed_perturbation(rng, 1);
    const shadow::Dense lin = shadow::evaluate(spin7::linearize(z), origin);
    std::vector<double> hs, errs;
    for (double h : {1e-2, 1e-3, 1e-4}) {
      shadow::Dense fd = spin7::perturbed_psi_map(z, h, origin);
      fd *= 1.0 / h;
      hs.push_back(h);
      errs.push_back(shadow::norm(fd - lin));
    }
    const double slope = loglog_slope(hs, errs);
    slopes += (slopes.empty() ? "" : ",") + fixed(slope);
    t.check(std::abs(slope - 1.0) <= 0.05, "slope " + fixed(slope));
  }
  return t.result("slopes " + slopes);
}

Outcome spin7_remainder_slope(Rng& rng) {
  Tally t;
  const std::array<double, 7> origin{};
  std::string slopes;
  for (int trial = 0; trial < 5; ++trial) {
    const spin7::Perturbation z = closed_perturbation(rng, make_scalar(1, 20));
    std::vector<double> ts, ns;
    for (double s : {1.0, 0.5, 0.25, 0.125}) {
      ts.push_back(s);
      ns.push_back(shadow::norm(spin7::nonlinear_remainder(z * Scalar(s), origin)));
    }
    const double slope = loglog_slope(ts, ns);
    slopes += (slopes.empty() ? "" : ",") + fixed(slope);
    t.check(std::abs(slope - 2.0) <= 0.1, "slope " + fixed(slope));
  }
  return t.result("slopes " + slopes);
}

Outcome spin7_infinitesimal(Rng&) {
  const g2::G2Data& g = g2::G2Data::flat();
  Tally t;
  for (std::size_t j = 0; j < 14; ++j) {
    const Form kappa0 = kappa_basis(j);
    const spin7::Infinitesimal z = spin7::solve_infinitesimal(kappa0);
    t.check(!z.rho0.is_zero() && d(z.rho0).is_zero() && d(g2::rho_hat(g, z.rho0)) == hodge_star(kappa0, g.metric()) &&
                d(z.a0) == kappa0,
            "basis κ₀ #" + std::to_string(j));
  }
  return t.result();
}

Outcome spin7_error_identity(Rng&) {
  Tally t;
  for (std::size_t j = 0; j < 14; ++j) {
    const spin7::ErrorIdentity id = spin7::error_identity(spin7::solve_infinitesimal(kappa_basis(j)), make_scalar(1, 4));
    t.check(id.lhs_known == id.rhs_known, "basis κ₀ #" + std::to_string(j));
  }
  return t.result("ε = 1/4");
}

// ---- cone ---------------------------------------------------------------------

cones::ConeElement random_cone_element(Rng& rng, int degree) {
  std::vector<cones::Monomial> pool;
  for (cones::Generator g : cones::kGenerators)
    for (int b = 0; b <= 1; ++b)
      if (cones::generator_degree(g) + b == degree) pool.push_back({0, b, g});
  cones::ConeElement x;
  for (int i = 0; i < 3 && !pool.empty(); ++i) {
    cones::Monomial m = pool[static_cast<std::size_t>(rng.integer(0, static_cast<long>(pool.size()) - 1))];
    m.a = static_cast<int>(rng.integer(-3, 5));
    x.add(m, rng.nonzero_rational());
  }
  return x;
}

Outcome cone_tables(Rng&) {
  const cones::NKAlgebra& alg = cones::NKAlgebra::instance();
  const Metric flat = Metric::euclidean(6);
  Tally t;
  for (cones::Generator x : cones::kGenerators) {
    Form s(6, 6 - cones::generator_degree(x));
    for (const auto& [g, c] : alg.link_star(x)) s += alg.model(g) * c;
    t.check(s == hodge_star(alg.model(x), flat), "link star of " + cones::generator_name(x));
    for (cones::Generator y : cones::kGenerators) {
      if (cones::generator_degree(x) + cones::generator_degree(y) > 6) continue;
      Form p(6, cones::generator_degree(x) + cones::generator_degree(y));
      for (const auto& [g, c] : alg.product(x, y)) p += alg.model(g) * c;
      t.check(p == wedge(alg.model(x), alg.model(y)), cones::generator_name(x) + "∧" + cones::generator_name(y));
    }
  }
  return t.result();
}

Outcome cone_closed(Rng&) {
  Tally t;
  t.check(cones::d(cones::cone_phi()).is_zero(), "dφ_C");
  t.check(cones::d(cones::cone_psi()).is_zero(), "dψ_C");
  t.check(cones::star(cones::cone_psi()) == cones::cone_phi(), "∗ψ_C = φ_C");
  return t.result(cones::cone_phi().to_string());
}

Outcome cone_derivation(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const int p = static_cast<int>(rng.integer(0, 7));
    const int q = static_cast<int>(rng.integer(0, 7 - p));
    const cones::ConeElement x = random_cone_element(rng, p), y = random_cone_element(rng, q);
    const Scalar sign = p % 2 ? -1 : 1;
    t.check(cones::d(cones::d(x)).is_zero(), "d∘d");
    t.check(cones::d(cones::wedge(x, y)) == cones::wedge(cones::d(x), y) + cones::wedge(x, cones::d(y)) * sign, "Leibniz");
    t.check(cones::star(cones::star(x)) == x, "∗∗");
  }
  return t.result();
}

Outcome cone_torsion(Rng&) {
  Tally t;
  for (const Scalar& r : {Scalar(1), Scalar(2), make_scalar(1, 3)})
    t.check(cones::torsion_at(cones::cone_phi(), r).is_zero(), "r = " + r.get_str());
  return t.result();
}

// ---- spectral -----------------------------------------------------------------

Outcome spectral_indicial(Rng&) {
  Tally t;
  const auto r0 = spectral::indicial_roots_functions(0, 7);
  t.check(r0.first == spectral::Surd(0) && r0.second == spectral::Surd(-5), "δ = 0");
  const auto r6 = spectral::indicial_roots_functions(6, 7);
  t.check(r6.first == spectral::Surd(1) && r6.second == spectral::Surd(-6), "δ = 6");
  return t.result("m = 7: {0,−5} and {1,−6}");
}

Outcome spectral_index_additivity(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<spectral::IndicialDatum> roots;
    const int count = static_cast<int>(rng.integer(0, 6));
    for (int i = 0; i < count; ++i) {
      const Scalar p = rng.rational(6, 2);
      const spectral::Surd lambda = rng.coin() ? spectral::Surd(p) : spectral::Surd(p, rng.nonzero_rational(2, 2), rng.integer(2, 7));
      roots.push_back({lambda, static_cast<int>(rng.integer(1, 3))});
    }
    // Weights are odd multiples of 1/8; draws that hit a root are skipped.
    std::vector<spectral::Surd> w;
    for (int i = 0; i < 3; ++i) w.emplace_back(make_scalar(2 * rng.integer(-40, 40) + 1, 8));
    std::sort(w.begin(), w.end());
    if (!(w[0] < w[1]) || !(w[1] < w[2])) continue;
    bool hits = false;
    for (const auto& r : roots)
      for (const auto& x : w) hits = hits || r.lambda == x;
    if (hits) continue;
    t.check(spectral::index_jump(roots, w[0], w[2]) == spectral::index_jump(roots, w[0], w[1]) + spectral::index_jump(roots, w[1], w[2]),
            "trial " + std::to_string(trial));
  }
  return t.result();
}

Outcome spectral_l2_cases(Rng&) {
  struct Row {
    spectral::CohomologyInput in;
    spectral::L2Dimensions out;
  };
  // (n, k, dim H^k_c, dim H^k, dim im(H^k → H^k(Σ)), dim im(H^k_c → H^k))
  const std::vector<Row> rows{
      {{6, 2, 1, 1, 1, 0}, {1, 2}}, {{7, 3, 2, 3, 1, 1}, {2, 3}}, {{8, 4, 3, 4, 2, 1}, {1, 5}},
      {{6, 3, 1, 1, 0, 1}, {1, 1}}, {{7, 5, 2, 4, 3, 1}, {1, 4}}, {{8, 6, 0, 2, 1, 0}, {0, 2}},
  };
  Tally t;
  for (const Row& r : rows)
    t.check(spectral::l2_cohomology(r.in) == r.out, "n=" + std::to_string(r.in.n) + " k=" + std::to_string(r.in.k));
  return t.result();
}

// ---- examples -----------------------------------------------------------------

Outcome examples_canonical(Rng&) {
  Tally t;
  for (int n = 2; n <= 200; ++n) {
    const examples::ZetaVector z = examples::canonical_zeta(n);
    const long closed = n == 2 ? 1 : (n % 2 ? static_cast<long>(n) * (n - 1) / 2 + 1 : static_cast<long>(n) * n / 2 + 1);
    t.check(examples::an_genericity(z) && examples::an_admissibility(z) && examples::an_primitive(z) && z.weighted_sum() == closed,
            "n=" + std::to_string(n));
  }
  return t.result("n = 2..200");
}

Outcome examples_records(Rng&) {
  Tally t;
  for (int n = 2; n <= 50; ++n) {
    const examples::ExampleRecord r = examples::an_record(examples::canonical_zeta(n));
    t.check(r.valid && r.b2 == n - 2, "n=" + std::to_string(n));
  }
  t.check(examples::an_record(3, {2, 1}).labels.at("S") == "S²×S³", "n=3 label");
  t.check(examples::wcp2_from_weights(1, 1, 1).q == std::array<long, 3>{2, 2, 2}, "(1,1,1)");
  t.check(examples::wcp2_from_weights(1, 1, 3).q == std::array<long, 3>{4, 4, 2}, "(1,1,3)");
  const examples::ExampleRecord y = examples::s3r4_action(2, 2, 1, 3);
  t.check(y.valid && y.tag == "Y^{2,1}", "(2,2,1,3)");
  t.check(!examples::s3r4_action(2, 2, 2, 2).valid, "(2,2,2,2)");
  return t.result();
}

Outcome examples_moment_map(Rng& rng) {
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<examples::Quaternion> u;
    const int n = static_cast<int>(rng.integer(2, 6));
    for (int a = 0; a < n; ++a) u.emplace_back(rng.rational(), rng.rational(), rng.rational(), rng.rational());
    bool ok = true;
    for (const auto& c : examples::an_moment_map(u)) ok = ok && c.is_imaginary();
    t.check(ok, "trial " + std::to_string(trial));
  }
  for (const auto& c : examples::an_moment_map(std::vector<examples::Quaternion>(4, examples::Quaternion(1))))
    t.check(c == examples::Quaternion(), "μ(1,…,1)");
  return t.result();
}

using CheckFn = Outcome (*)(Rng&);

const std::vector<std::pair<std::string, std::vector<std::pair<std::string, CheckFn>>>>& registry() {
  static const std::vector<std::pair<std::string, std::vector<std::pair<std::string, CheckFn>>>> r{
      {"exterior",
       {{"star_contract", exterior_star_contract},
        {"double_star", exterior_double_star},
        {"d_squared", exterior_d_squared},
        {"leibniz", exterior_leibniz}}},
      {"seifert",
       {{"codifferential_forms", seifert_codifferential},
        {"transverse_star", seifert_transverse_star},
        {"adapted_d_basic", seifert_adapted_d}}},
      {"g2",
       {{"projector_ranks", g2_projector_ranks},
        {"projector_algebra", g2_projector_algebra},
        {"identity_contraction", g2_identity_contraction},
        {"identity_codifferential", g2_identity_codifferential},
        {"dirac", g2_dirac},
        {"torsion_round_trip", g2_torsion_round_trip}}},
      {"spin7",
       {{"self_pairing", spin7_self_pairing},
        {"residuals", spin7_residuals},
        {"eps_scaling", spin7_eps_scaling},
        {"linearity", spin7_linearity},
        {"derivative_slope", spin7_derivative_slope},
        {"remainder_slope", spin7_remainder_slope},
        {"infinitesimal", spin7_infinitesimal},
        {"error_identity", spin7_error_identity}}},
      {"cone",
       {{"tables", cone_tables}, {"closed", cone_closed}, {"derivation", cone_derivation}, {"torsion_free", cone_torsion}}},
      {"spectral",
       {{"indicial_roots", spectral_indicial},
        {"index_additivity", spectral_index_additivity},
        {"l2_cases", spectral_l2_cases}}},
      {"examples",
       {{"canonical_zeta", examples_canonical}, {"records", examples_records}, {"moment_map", examples_moment_map}}},
  };
  return r;
}

const std::vector<std::pair<std::string, CheckFn>>& suite(const std::string& name) {
  for (const auto& [s, checks] : registry())
    if (s == name) return checks;
  throw DomainError("verify", "unknown suite '" + name + "'");
}

CheckRecord execute(const std::string& full_name, CheckFn fn, std::uint64_t seed) {
  CheckRecord rec;
  rec.name = full_name;
  Rng rng(seed ^ fnv1a(full_name));
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = fn(rng);
    rec.status = o.ok ? Status::Pass : Status::Fail;
    rec.detail = o.detail;
  } catch (const std::exception& e) {
    rec.status = Status::Error;
    rec.detail = e.what();
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [s, checks] : registry()) out.push_back(s);
    return out;
  }();
  return names;
}

std::vector<std::string> check_names(const std::string& name) {
  std::vector<std::string> out;
  for (const auto& [c, fn] : suite(name)) out.push_back(name + "." + c);
  return out;
}

std::vector<CheckRecord> run_suite(const std::string& name, std::uint64_t seed) {
  std::vector<CheckRecord> out;
  for (const auto& [c, fn] : suite(name)) out.push_back(execute(name + "." + c, fn, seed));
  return out;
}

CheckRecord run_check(const std::string& name, std::uint64_t seed) {
  const auto dot = name.find('.');
  if (dot == std::string::npos) throw DomainError("verify", "check names look like <suite>.<check>");
  for (const auto& [c, fn] : suite(name.substr(0, dot)))
    if (c == name.substr(dot + 1)) return execute(name, fn, seed);
  throw DomainError("verify", "unknown check '" + name + "'");
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace holocalc::verify
