#include "doctest.h"
#include "holocalc/cones.hpp"
#include "holocalc/random.hpp"
#include "support/oracles.hpp"

using namespace holocalc;
using namespace holocalc::cones;

namespace {

using G = Generator;

ConeElement t(const Scalar& c, int a, int b, G g) { return ConeElement::term(c, a, b, g); }

Form e6(std::initializer_list<int> idx, const Scalar& c = 1) { return Form::basis(6, idx, c); }

const NKAlgebra& alg() { return NKAlgebra::instance(); }

ConeElement random_element(Rng& rng, int degree) {
  std::vector<Monomial> pool;
  for (G g : kGenerators)
    for (int b = 0; b <= 1; ++b)
      if (generator_degree(g) + b == degree) pool.push_back({0, b, g});
  ConeElement x;
  for (int i = 0; i < 3 && !pool.empty(); ++i) {
    Monomial m = pool[static_cast<std::size_t>(rng.integer(0, static_cast<long>(pool.size()) - 1))];
    m.a = static_cast<int>(rng.integer(-3, 5));
    x.add(m, rng.nonzero_rational());
  }
  return x;
}

Metric cone_metric(const Scalar& r) {
  std::vector<Scalar> diag(7, r * r);
  diag[0] = 1;
  return Metric::diagonal(diag);
}

}  // namespace

TEST_CASE("generated product and star tables") {
  CHECK(alg().product(G::Omega, G::ReOmega).empty());
  CHECK(alg().product(G::Omega, G::ImOmega).empty());
  CHECK(alg().product(G::ReOmega, G::ReOmega).empty());
  CHECK(alg().product(G::ImOmega, G::ImOmega).empty());
  CHECK(alg().product(G::ReOmega, G::ImOmega) == Combination{{G::Omega3, make_scalar(2, 3)}});
  CHECK(alg().product(G::ImOmega, G::ReOmega) == Combination{{G::Omega3, make_scalar(-2, 3)}});
  CHECK(alg().product(G::Omega, G::Omega) == Combination{{G::Omega2, 1}});
  CHECK(alg().product(G::Omega, G::Omega2) == Combination{{G::Omega3, 1}});
  CHECK(alg().model(G::Omega3) == e6({1, 2, 3, 4, 5, 6}, 6));

  CHECK(alg().link_star(G::One) == Combination{{G::Omega3, make_scalar(1, 6)}});
  CHECK(alg().link_star(G::Omega) == Combination{{G::Omega2, make_scalar(1, 2)}});
  CHECK(alg().link_star(G::ReOmega) == Combination{{G::ImOmega, 1}});
  CHECK(alg().link_star(G::ImOmega) == Combination{{G::ReOmega, -1}});
  CHECK(alg().link_star(G::Omega2) == Combination{{G::Omega, 2}});
  CHECK(alg().link_star(G::Omega3) == Combination{{G::One, 6}});

  // Same tables from the independent oracles.
  const Metric flat = Metric::euclidean(6);
  for (G x : kGenerators) {
    Form s(6, 6 - generator_degree(x));
    for (const auto& [g, c] : alg().link_star(x)) s += alg().model(g) * c;
    CHECK(s == oracle::star(alg().model(x), flat, 1));
    for (G y : kGenerators) {
      if (generator_degree(x) + generator_degree(y) > 6) continue;
      Form p(6, generator_degree(x) + generator_degree(y));
      for (const auto& [g, c] : alg().product(x, y)) p += alg().model(g) * c;
      CHECK(p == oracle::wedge_tuples(alg().model(x), alg().model(y)));
    }
  }

  CHECK(alg().differential(G::Omega) == Combination{{G::ReOmega, 3}});
  CHECK(alg().differential(G::ImOmega) == Combination{{G::Omega2, -2}});
  CHECK(alg().differential(G::ReOmega).empty());
  CHECK(alg().differential(G::Omega2).empty());
  CHECK(alg().differential(G::Omega3).empty());
}

TEST_CASE("the cone 3-form and its dual are closed") {
  const ConeElement phi = cone_phi();
  CHECK(phi == t(1, 2, 1, G::Omega) + t(1, 3, 0, G::ReOmega));
  CHECK(phi.degree() == 3);
  CHECK(d(phi).is_zero());
  const ConeElement psi = cone_psi();
  CHECK(psi == t(make_scalar(1, 2), 4, 0, G::Omega2) - t(1, 3, 1, G::ImOmega));
  CHECK(psi.degree() == 4);
  CHECK(d(psi).is_zero());
  CHECK(star(psi) == phi);
  CHECK(wedge(phi, psi) == t(7, 6, 1, G::Omega3) * make_scalar(1, 6));
  CHECK(phi.to_string() == "r^2·dr∧ω + r^3·ReΩ");
  CHECK(psi.to_string() == "-r^3·dr∧ImΩ + 1/2 r^4·ω²");
}

TEST_CASE("graded derivation laws") {
  Rng rng(113);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = static_cast<int>(rng.integer(0, 7));
    const int q = static_cast<int>(rng.integer(0, 7 - p));
    const ConeElement x = random_element(rng, p);
    const ConeElement y = random_element(rng, q);
    CHECK(d(d(x)).is_zero());
    const Scalar sign = p % 2 ? -1 : 1;
    CHECK(d(wedge(x, y)) == wedge(d(x), y) + wedge(x, d(y)) * sign);
    CHECK(star(star(x)) == x);
  }
}

TEST_CASE("realization at a radius") {
  CHECK(realize(cone_phi(), 1) == g2::phi0());
  CHECK(realize(cone_psi(), 1) == g2::psi0());
  Rng rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    const Scalar r = abs(rng.nonzero_rational(4, 3));
    const int p = static_cast<int>(rng.integer(0, 7));
    const int q = static_cast<int>(rng.integer(0, 7 - p));
    const ConeElement x = random_element(rng, p);
    const ConeElement y = random_element(rng, q);
    if (x.is_zero() || y.is_zero()) continue;
    CHECK(realize(wedge(x, y), r, p + q) == holocalc::wedge(realize(x, r), realize(y, r)));
    CHECK(realize(star(x), r) == hodge_star(realize(x, r), cone_metric(r)));
  }
  CHECK_THROWS_AS(realize(cone_phi(), 0), DomainError);
}

TEST_CASE("torsion through the G2 adapter") {
  for (const Scalar& r : {Scalar(1), Scalar(2), make_scalar(1, 3)}) {
    const g2::TorsionClasses tc = torsion_at(cone_phi(), r);
    CHECK(tc.is_zero());
  }
  // Rotating the phase of Ω keeps the cone metric but not closedness.
  const ConeElement rotated = t(1, 2, 1, G::Omega) + t(make_scalar(3, 5), 3, 0, G::ReOmega) + t(make_scalar(4, 5), 3, 0, G::ImOmega);
  const Scalar r = 2;
  const g2::TorsionClasses tc = torsion_at(rotated, r);
  CHECK(!tc.is_zero());
  const g2::G2Data g(realize(rotated, r));
  CHECK(g2::torsion_dphi(g, tc) == realize(d(rotated), r, 4));
  CHECK(g2::torsion_dpsi(g, tc) == realize(d(star(rotated)), r, 5));
  CHECK_THROWS_AS(torsion_at(cone_phi() * Scalar(2), 1), DomainError);
  CHECK_THROWS_AS(torsion_at(cone_psi(), 1), DomainError);
}

TEST_CASE("primitive (1,1) forms") {
  CHECK(!primitive_check(alg().model(G::Omega)));
  CHECK(primitive_check(e6({1, 2}) - e6({3, 4})));
  const Form k = e6({1, 3}) + e6({4, 2});
  const bool by_oracle = oracle::wedge_tuples(k, alg().model(G::Omega2)).is_zero() &&
                         oracle::wedge_tuples(k, alg().model(G::ReOmega)).is_zero() &&
                         oracle::wedge_tuples(k, alg().model(G::ImOmega)).is_zero();
  CHECK(primitive_check(k) == by_oracle);
  CHECK(!primitive_check(k));

  // The primitive (1,1) space is 8-dimensional and anti-self-dual against ω.
  const auto& b2 = blades(6, 2);
  Matrix m(blades(6, 4).size() + 2 * blades(6, 5).size(), b2.size());
  for (std::size_t c = 0; c < b2.size(); ++c) {
    const Form k2 = Form::basis(6, b2[c]);
    std::vector<Scalar> col = holocalc::wedge(k2, alg().model(G::Omega2)).to_vector();
    for (G g : {G::ReOmega, G::ImOmega}) {
      const auto v = holocalc::wedge(k2, alg().model(g)).to_vector();
      col.insert(col.end(), v.begin(), v.end());
    }
    for (std::size_t r = 0; r < col.size(); ++r) m(r, c) = col[r];
  }
  const Matrix kernel = null_space(m);
  CHECK(kernel.cols() == 8);
  const Metric flat = Metric::euclidean(6);
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    std::vector<Scalar> v(b2.size());
    for (std::size_t r = 0; r < b2.size(); ++r) v[r] = kernel(r, j);
    const Form kappa = Form::from_vector(6, 2, v);
    CHECK(primitive_check(kappa));
    CHECK(hodge_star(kappa, flat) == -holocalc::wedge(kappa, alg().model(G::Omega)));
  }
  CHECK_THROWS_AS(primitive_check(Form::basis(7, {1, 2})), DomainError);
}

TEST_CASE("invalid cone elements") {
  ConeElement x;
  CHECK_THROWS_AS(x.add({0, 2, G::Omega}, 1), DomainError);
  CHECK_THROWS_AS((cone_phi() + cone_psi()).degree(), DomainError);
  CHECK(ConeElement().degree() == -1);
}
