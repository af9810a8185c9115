// One PASS/FAIL line per acceptance criterion. Each criterion runs the
// library verification checks plus independent oracle computations.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "holocalc/cones.hpp"
#include "holocalc/examples.hpp"
#include "holocalc/g2.hpp"
#include "holocalc/random.hpp"
#include "holocalc/seifert.hpp"
#include "holocalc/spectral.hpp"
#include "holocalc/spin7.hpp"
#include "holocalc/verify.hpp"
#include "support/oracles.hpp"

using namespace holocalc;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr double kCriterion1Seconds = 30.0;
constexpr double kTotalSeconds = 120.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Result {
  bool ok = true;
  int checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
  void run(const std::vector<std::string>& names) {
    for (const auto& n : names) {
      const verify::CheckRecord r = verify::run_check(n, kSeed);
      expect(r.status == verify::Status::Pass, n + ": " + r.detail);
    }
  }
};

Form e7(std::initializer_list<int> idx, const Scalar& c = 1) { return Form::basis(7, idx, c); }

Result criterion1() {
  Result r;
  r.run({"exterior.star_contract", "exterior.double_star", "exterior.d_squared", "exterior.leibniz"});
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      for (Blade b : blades(n, k)) {
        const Form beta = Form::basis(n, b);
        r.expect(hodge_star(beta, Metric::euclidean(n)) == oracle::star(beta, Metric::euclidean(n), 1), "star oracle");
      }
  return r;
}

Result criterion2() {
  Result r;
  r.run({"g2.projector_ranks", "g2.projector_algebra"});
  const g2::G2Data& g = g2::G2Data::flat();
  Rng rng(kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const g2::Split2 s = g2::project2(g, rng.constant_form(7, 2));
    r.expect(oracle::wedge_tuples(s.p14, g2::psi0()).is_zero(), "14-type annihilates ψ");
    r.expect(oracle::star(s.p14, g.metric(), 1) == -oracle::wedge_tuples(s.p14, g2::phi0()), "∗σ = −σ∧φ on the 14-type");
    const g2::Split3 q = g2::project3(g, rng.constant_form(7, 3));
    r.expect(oracle::wedge_tuples(q.p27, g2::phi0()).is_zero() && oracle::wedge_tuples(q.p27, g2::psi0()).is_zero(),
             "27-type annihilates φ and ψ");
  }
  for (int i = 1; i <= 7; ++i) {
    const Form x = contract_basis(i, g2::phi0());
    r.expect(g2::project2(g, x).p7 == x, "X⌟φ lies in the 7-type");
  }
  return r;
}

Result criterion3() {
  Result r;
  r.run({"g2.identity_contraction", "g2.identity_codifferential", "g2.dirac"});
  const g2::G2Data& g = g2::G2Data::flat();
  Rng rng(kSeed + 3);
  const std::vector<Scalar> pt{make_scalar(1, 2), -1, make_scalar(1, 3), 0, 2, make_scalar(-1, 4), 1};
  for (int trial = 0; trial < 50; ++trial) {
    const Poly f = rng.poly(7, 3, 3);
    const Form gamma = rng.form(7, 1, 3, 0.6);
    r.expect(g2::curl(g, gamma).evaluate(pt) == oracle::star(wedge(d(gamma), g2::psi0()).evaluate(pt), g.metric(), 1),
             "curl against the star oracle");
    const g2::DiracPair once = g2::dirac_flat(f, gamma);
    const g2::DiracPair twice = g2::dirac_flat(once.f, once.gamma);
    r.expect(Form::function(7, twice.f) == oracle::flat_laplacian(Form::function(7, f)), "Dirac² on functions");
    r.expect(twice.gamma == oracle::flat_laplacian(gamma), "Dirac² on 1-forms");
  }
  return r;
}

Result criterion4() {
  Result r;
  r.run({"g2.torsion_round_trip"});
  const g2::G2Data& g = g2::G2Data::flat();
  Rng rng(kSeed + 4);
  for (int trial = 0; trial < 20; ++trial) {
    const g2::TorsionClasses t{rng.rational(), rng.constant_form(7, 1), g2::project2(g, rng.constant_form(7, 2)).p14,
                               g2::project3(g, rng.constant_form(7, 3)).p27};
    // Synthetic derivatives assembled with the oracle wedge and star.
    const Form dphi = g2::psi0() * t.tau0 + oracle::wedge_tuples(t.tau1, g2::phi0()) * Scalar(3) + oracle::star(t.tau3, g.metric(), 1);
    const Form dpsi = oracle::wedge_tuples(t.tau1, g2::psi0()) * Scalar(4) + oracle::wedge_tuples(t.tau2, g2::phi0());
    r.expect(g2::torsion_from_derivatives(g, dphi, dpsi) == t, "round trip");
  }
  r.expect(g2::torsion_from_derivatives(g, Form(7, 4), Form(7, 5)).is_zero(), "flat φ₀");
  return r;
}

Result criterion5() {
  Result r;
  r.run({"cone.tables", "cone.closed", "cone.torsion_free"});
  const cones::NKAlgebra& alg = cones::NKAlgebra::instance();
  const Metric flat = Metric::euclidean(6);
  for (cones::Generator x : cones::kGenerators) {
    Form s(6, 6 - cones::generator_degree(x));
    for (const auto& [gen, c] : alg.link_star(x)) s += alg.model(gen) * c;
    r.expect(s == oracle::star(alg.model(x), flat, 1), "link star table against the oracle");
    for (cones::Generator y : cones::kGenerators) {
      if (cones::generator_degree(x) + cones::generator_degree(y) > 6) continue;
      Form p(6, cones::generator_degree(x) + cones::generator_degree(y));
      for (const auto& [gen, c] : alg.product(x, y)) p += alg.model(gen) * c;
      r.expect(p == oracle::wedge_tuples(alg.model(x), alg.model(y)), "product table against the oracle");
    }
  }
  r.expect(cones::d(cones::cone_phi()).is_zero() && cones::d(cones::cone_psi()).is_zero(), "dφ_C = 0 = dψ_C");
  return r;
}

Result criterion6() {
  Result r;
  r.run({"spin7.self_pairing", "spin7.residuals", "spin7.eps_scaling"});
  const Form phi = spin7::assemble_phi(spin7::Spin7Triple::flat());
  const Form sq = oracle::wedge_tuples(phi, phi);
  const Metric g = spin7::metric(spin7::Spin7Triple::flat(), std::vector<Scalar>(7));
  r.expect(sq == g.volume_form() * Scalar(14), "Φ∧Φ = 14 vol₈ (oracle)");
  r.expect(sq == Form::basis(8, {1, 2, 3, 4, 5, 6, 7, 8}, -14), "vol₈ = −e¹²³⁴⁵⁶⁷⁸ in the chart");
  return r;
}

Result criterion7() {
  Result r;
  r.run({"spin7.linearity", "spin7.derivative_slope", "spin7.remainder_slope", "spin7.infinitesimal", "spin7.error_identity"});
  // Infinitesimal solutions checked against the oracle star as well.
  const g2::G2Data& g = g2::G2Data::flat();
  const auto& b2 = blades(7, 2);
  for (std::size_t j = 0; j < 14; ++j) {
    Form kappa(7, 2);
    for (std::size_t row = 0; row < b2.size(); ++row)
      if (g.basis2_14()(row, j) != 0) kappa.add_term(b2[row], Poly(7, g.basis2_14()(row, j)));
    const spin7::Infinitesimal z = spin7::solve_infinitesimal(kappa);
    r.expect(d(g2::rho_hat(g, z.rho0)) == oracle::star(kappa, g.metric(), 1), "dρ̂₀ = ∗κ₀ (oracle star)");
    r.expect(d(z.rho0).is_zero() && d(z.a0) == kappa, "dρ₀ = 0, da₀ = κ₀");
  }
  return r;
}

Result criterion8() {
  Result r;
  r.run({"seifert.codifferential_forms", "seifert.transverse_star"});
  for (int n = 2; n <= 7; ++n) {
    const seifert::FiberedChart fc(Metric::euclidean(n), Poly::variable(n, 0) * Form::basis(n, {2}));
    for (int k = 0; k <= n; ++k)
      for (Blade b : blades(n, k)) {
        const Form beta = Form::basis(n, b);
        r.expect(seifert::transverse_star(fc, beta) == oracle::star(beta, Metric::euclidean(n), 1), "transverse star oracle");
      }
  }
  return r;
}

Result criterion9() {
  Result r;
  r.run({"spectral.indicial_roots", "spectral.index_additivity", "spectral.l2_cases"});
  const auto r0 = spectral::indicial_roots_functions(0, 7);
  const auto r6 = spectral::indicial_roots_functions(6, 7);
  r.expect(r0.first.to_string() == "0" && r0.second.to_string() == "-5", "δ = 0 gives {0, −5}");
  r.expect(r6.first.to_string() == "1" && r6.second.to_string() == "-6", "δ = 6 gives {1, −6}");
  Rng rng(kSeed + 9);
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar delta = abs(rng.rational(20, 3));
    const int m = static_cast<int>(rng.integer(2, 9));
    const auto [lp, lm] = spectral::indicial_roots_functions(delta, m);
    for (double l : {lp.to_double(), lm.to_double()})
      r.expect(std::abs(l * (l + m - 2) - delta.get_d()) < 1e-9, "λ(λ+m−2) = δ");
    r.expect(lm < lp || lm == lp, "λ₋ ≤ λ₊");
  }
  // The three degree regimes on fixed inputs.
  r.expect(spectral::l2_cohomology({6, 2, 1, 1, 1, 0}) == spectral::L2Dimensions{1, 2}, "k < n/2");
  r.expect(spectral::l2_cohomology({6, 3, 2, 3, 1, 2}) == spectral::L2Dimensions{2, 4}, "k = n/2");
  r.expect(spectral::l2_cohomology({6, 4, 1, 3, 2, 1}) == spectral::L2Dimensions{1, 3}, "k > n/2");
  return r;
}

Result criterion10() {
  Result r;
  r.run({"examples.canonical_zeta", "examples.records", "examples.moment_map"});
  for (int n = 2; n <= 200; ++n) {
    const examples::ZetaVector z = examples::canonical_zeta(n);
    long sum = 0;
    for (std::size_t i = 0; i < z.zeta().size(); ++i) sum += static_cast<long>(i + 1) * z.zeta()[i];
    const long closed = n == 2 ? 1 : n % 2 ? static_cast<long>(n) * (n - 1) / 2 + 1 : static_cast<long>(n) * n / 2 + 1;
    r.expect(sum == closed, "|ζ| closed form");
    r.expect(examples::an_record(z).b2 == n - 2, "b₂ = n − 2");
  }
  r.expect(examples::wcp2_from_weights(1, 1, 1).q == std::array<long, 3>{2, 2, 2}, "(1,1,1) ↦ (2,2,2)");
  const examples::ExampleRecord y = examples::s3r4_action(2, 2, 1, 3);
  r.expect(y.valid && y.tag == "Y^{2,1}", "(2,2,1,3) ↦ Y^{2,1}");
  return r;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  struct Criterion {
    int id;
    const char* title;
    std::function<Result()> fn;
  };
  const std::vector<Criterion> criteria{
      {1, "exterior core exactness", criterion1},
      {2, "G2 type decomposition", criterion2},
      {3, "identities for functions and 1-forms", criterion3},
      {4, "torsion round trip", criterion4},
      {5, "cone torsion-free", criterion5},
      {6, "Spin(7) ansatz", criterion6},
      {7, "linearization", criterion7},
      {8, "Seifert operators", criterion8},
      {9, "spectral calculators", criterion9},
      {10, "example catalogs", criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = c.fn();
    } catch (const std::exception& e) {
      r.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (c.id == 1) r.expect(secs < kCriterion1Seconds, "runtime " + std::to_string(secs) + " s ≥ 30 s");
    if (c.id == 10) {
      const double total = seconds_since(start);
      r.expect(total < kTotalSeconds, "total runtime " + std::to_string(total) + " s ≥ 120 s");
    }
    std::printf("%s criterion %2d: %s (%d checks, %.2f s)%s%s\n", r.ok ? "PASS" : "FAIL", c.id, c.title, r.checks, secs,
                r.ok ? "" : " first failure: ", r.ok ? "" : r.first_failure.c_str());
    failed += !r.ok;
  }
  std::printf("total %.2f s, %d/%zu criteria passed\n", seconds_since(start), static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
