#include "holocalc/cones.hpp"

#include <sstream>

namespace holocalc::cones {

namespace {

constexpr const char* kModule = "cones";

Form e6(std::initializer_list<int> idx, const Scalar& c = 1) { return Form::basis(6, idx, c); }

void accumulate(Combination& into, Generator g, const Scalar& c) {
  if (c == 0) return;
  Scalar& slot = into[g];
  slot += c;
  if (slot == 0) into.erase(g);
}

Scalar power(const Scalar& r, int a) {
  if (a >= 0) return pow(r, static_cast<unsigned>(a));
  return Scalar(1) / pow(r, static_cast<unsigned>(-a));
}

// e^i ↦ e^{i+1} from R^6 into R^7.
Form shift(const Form& f) {
  Form out(7, f.degree());
  for (const auto& [b, p] : f.terms()) out.add_term(b << 1, Poly(7, p.constant_term()));
  return out;
}

}  // namespace

int generator_degree(Generator g) {
  switch (g) {
    case Generator::One: return 0;
    case Generator::Omega: return 2;
    case Generator::ReOmega:
    case Generator::ImOmega: return 3;
    case Generator::Omega2: return 4;
    case Generator::Omega3: return 6;
  }
  return 0;
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::One: return "1";
    case Generator::Omega: return "ω";
    case Generator::ReOmega: return "ReΩ";
    case Generator::ImOmega: return "ImΩ";
    case Generator::Omega2: return "ω²";
    case Generator::Omega3: return "ω³";
  }
  return "?";
}

ConeElement ConeElement::term(const Scalar& c, int a, int b, Generator g) {
  ConeElement x;
  x.add({a, b, g}, c);
  return x;
}

int ConeElement::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    if (deg >= 0 && m.degree() != deg) throw DomainError(kModule, "element has mixed degrees");
    deg = m.degree();
  }
  return deg;
}

void ConeElement::add(const Monomial& m, const Scalar& c) {
  if (m.b < 0 || m.b > 1) throw DomainError(kModule, "dr exponent must be 0 or 1");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ConeElement& ConeElement::operator+=(const ConeElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ConeElement& ConeElement::operator-=(const ConeElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ConeElement& ConeElement::operator*=(const Scalar& s) {
  if (s == 0) terms_.clear();
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string ConeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Scalar mag = abs(c);
    std::string form = m.b == 1 ? "dr" : "";
    if (m.g != Generator::One) form += (form.empty() ? "" : "∧") + generator_name(m.g);
    std::string radial = m.a == 0 ? "" : (m.a == 1 ? "r" : "r^" + std::to_string(m.a));
    std::string body = radial;
    if (!form.empty()) body += (body.empty() ? "" : "·") + form;
    if (mag != 1 || body.empty()) os << mag.get_str() << (body.empty() ? "" : " ");
    os << body;
  }
  return os.str();
}

const NKAlgebra& NKAlgebra::instance() {
  static const NKAlgebra algebra;
  return algebra;
}

NKAlgebra::NKAlgebra() {
  const Form omega = e6({1, 2}) + e6({3, 4}) + e6({5, 6});
  const Form re = e6({1, 3, 5}) - e6({1, 4, 6}) - e6({2, 3, 6}) - e6({2, 4, 5});
  const Form im = e6({1, 3, 6}) + e6({1, 4, 5}) + e6({2, 3, 5}) - e6({2, 4, 6});
  const Form omega2 = holocalc::wedge(omega, omega);
  model_ = {Form::constant(6, 1), omega, re, im, omega2, holocalc::wedge(omega2, omega)};

  for (Generator x : kGenerators)
    for (Generator y : kGenerators) {
      if (generator_degree(x) + generator_degree(y) > 6) continue;
      product_[index(x)][index(y)] = decompose(holocalc::wedge(model(x), model(y)));
    }
  const Metric flat = Metric::euclidean(6);
  for (Generator g : kGenerators) star_[index(g)] = decompose(hodge_star(model(g), flat));

  d_[index(Generator::Omega)] = {{Generator::ReOmega, 3}};
  d_[index(Generator::ImOmega)] = {{Generator::Omega2, -2}};
  // d(ReΩ) is forced: 3 d(ReΩ) = d(dω) = 0.
  d_[index(Generator::ReOmega)] = {};
  // Leibniz on the even generators ω² = ω∧ω and ω³ = ω²∧ω.
  auto leibniz_even = [&](Generator a, Generator b) {
    Combination out;
    for (const auto& [g, c] : d_[index(a)])
      for (const auto& [h, e] : product(g, b)) accumulate(out, h, c * e);
    for (const auto& [g, c] : d_[index(b)])
      for (const auto& [h, e] : product(a, g)) accumulate(out, h, c * e);
    return out;
  };
  d_[index(Generator::Omega2)] = leibniz_even(Generator::Omega, Generator::Omega);
  d_[index(Generator::Omega3)] = leibniz_even(Generator::Omega2, Generator::Omega);

  for (Generator g : kGenerators) {
    Combination dd;
    for (const auto& [h, c] : d_[index(g)])
      for (const auto& [k, e] : d_[index(h)]) accumulate(dd, k, c * e);
    if (!dd.empty()) throw DomainError(kModule, "rewrite system violates d∘d = 0 on " + generator_name(g));
  }
}

Combination NKAlgebra::decompose(const Form& f) const {
  std::vector<Generator> basis;
  for (Generator g : kGenerators)
    if (generator_degree(g) == f.degree()) basis.push_back(g);
  const auto& rows = blades(6, f.degree());
  Matrix m(rows.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto v = model(basis[c]).to_vector();
    for (std::size_t r = 0; r < rows.size(); ++r) m(r, c) = v[r];
  }
  const auto x = solve(m, f.to_vector());
  if (!x) throw DomainError(kModule, "form is not in the span of the structure generators");
  Combination out;
  for (std::size_t c = 0; c < basis.size(); ++c) accumulate(out, basis[c], (*x)[c]);
  return out;
}

ConeElement wedge(const ConeElement& x, const ConeElement& y) {
  const NKAlgebra& alg = NKAlgebra::instance();
  ConeElement out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      if (mx.b + my.b > 1) continue;
      if (generator_degree(mx.g) + generator_degree(my.g) > 6) continue;
      // G∧dr = (−1)^{deg G} dr∧G
      const Scalar sign = (my.b == 1 && generator_degree(mx.g) % 2) ? -1 : 1;
      for (const auto& [g, c] : alg.product(mx.g, my.g)) out.add({mx.a + my.a, mx.b + my.b, g}, cx * cy * c * sign);
    }
  return out;
}

ConeElement d(const ConeElement& x) {
  const NKAlgebra& alg = NKAlgebra::instance();
  ConeElement out;
  for (const auto& [m, c] : x.terms()) {
    if (m.b == 0 && m.a != 0) out.add({m.a - 1, 1, m.g}, c * m.a);
    const Scalar sign = m.b == 1 ? -1 : 1;
    for (const auto& [g, e] : alg.differential(m.g)) out.add({m.a, m.b, g}, c * e * sign);
  }
  return out;
}

ConeElement star(const ConeElement& x) {
  const NKAlgebra& alg = NKAlgebra::instance();
  ConeElement out;
  for (const auto& [m, c] : x.terms()) {
    const int p = generator_degree(m.g);
    const int a = m.a + 6 - 2 * p;
    // ∗(r^a G) = (−1)^p r^{a+6−2p} dr∧∗₆G,  ∗(r^a dr∧G) = r^{a+6−2p} ∗₆G
    const Scalar sign = (m.b == 0 && p % 2) ? -1 : 1;
    for (const auto& [g, e] : alg.link_star(m.g)) out.add({a, 1 - m.b, g}, c * e * sign);
  }
  return out;
}

ConeElement cone_phi() {
  return ConeElement::term(1, 2, 1, Generator::Omega) + ConeElement::term(1, 3, 0, Generator::ReOmega);
}

ConeElement cone_psi() { return star(cone_phi()); }

Form realize(const ConeElement& x, const Scalar& r, int degree) {
  if (r <= 0) throw DomainError(kModule, "radius must be positive");
  const NKAlgebra& alg = NKAlgebra::instance();
  int deg = x.degree();
  if (deg >= 0 && degree >= 0 && deg != degree) throw DomainError(kModule, "element degree differs from the requested one");
  if (deg < 0) deg = degree < 0 ? 0 : degree;
  Form out(7, deg);
  for (const auto& [m, c] : x.terms()) {
    Form link = shift(alg.model(m.g)) * (c * power(r, m.a));
    out += m.b == 1 ? holocalc::wedge(Form::basis(7, {1}), link) : link;
  }
  return out;
}

g2::TorsionClasses torsion_at(const ConeElement& phi, const Scalar& r) {
  if (phi.degree() != 3) throw DomainError(kModule, "cone torsion needs a 3-form");
  const ConeElement psi = star(phi);
  const g2::G2Data g(realize(phi, r));
  Matrix cone(7, 7);
  cone(0, 0) = 1;
  for (std::size_t i = 1; i < 7; ++i) cone(i, i) = r * r;
  if (!(g.metric().matrix() == cone) || g.metric().orientation() != 1)
    throw DomainError(kModule, "3-form does not induce the oriented cone metric");
  if (!(g.psi() == realize(psi, r))) throw DomainError(kModule, "cone star disagrees with the G2 dual form");
  return g2::torsion_from_derivatives(g, realize(d(phi), r, 4), realize(d(psi), r, 5));
}

bool primitive_check(const Form& kappa) {
  if (kappa.dim() != 6 || kappa.degree() != 2 || !kappa.is_constant())
    throw DomainError(kModule, "primitive check takes a constant 2-form on R^6");
  const NKAlgebra& alg = NKAlgebra::instance();
  return holocalc::wedge(kappa, alg.model(Generator::Omega2)).is_zero() &&
         holocalc::wedge(kappa, alg.model(Generator::ReOmega)).is_zero() &&
         holocalc::wedge(kappa, alg.model(Generator::ImOmega)).is_zero();
}

}  // namespace holocalc::cones
