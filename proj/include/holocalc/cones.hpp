#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "holocalc/form.hpp"
#include "holocalc/g2.hpp"

namespace holocalc::cones {

/// Invariant forms generated by the SU(3)-structure of the link.
enum class Generator { One, Omega, ReOmega, ImOmega, Omega2, Omega3 };
inline constexpr std::array<Generator, 6> kGenerators{Generator::One,     Generator::Omega,  Generator::ReOmega,
                                                      Generator::ImOmega, Generator::Omega2, Generator::Omega3};

int generator_degree(Generator g);
std::string generator_name(Generator g);

/// r^a (dr)^b G
struct Monomial {
  int a = 0;
  int b = 0;
  Generator g = Generator::One;
  auto operator<=>(const Monomial&) const = default;
  int degree() const { return b + generator_degree(g); }
};

/// Finite sum of c·r^a (dr)^b G in canonical form: no zero coefficients, no
/// dr∧dr, and only the six generators (all products are rewritten).
class ConeElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  ConeElement() = default;
  static ConeElement term(const Scalar& c, int a, int b, Generator g);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a homogeneous element; throws for mixed degrees, −1 for zero.
  int degree() const;

  void add(const Monomial& m, const Scalar& c);
  ConeElement& operator+=(const ConeElement& o);
  ConeElement& operator-=(const ConeElement& o);
  ConeElement& operator*=(const Scalar& s);
  friend ConeElement operator+(ConeElement x, const ConeElement& y) { return x += y; }
  friend ConeElement operator-(ConeElement x, const ConeElement& y) { return x -= y; }
  friend ConeElement operator*(ConeElement x, const Scalar& s) { return x *= s; }
  friend ConeElement operator*(const Scalar& s, ConeElement x) { return x *= s; }
  bool operator==(const ConeElement&) const = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Linear combination of generators.
using Combination = std::map<Generator, Scalar>;

/// Rewrite tables. Products and the link star are generated from the flat
/// model ω₀ = e¹²+e³⁴+e⁵⁶, Ω₀ = (e¹+ie²)∧(e³+ie⁴)∧(e⁵+ie⁶) on R^6; the
/// differential is dω = 3ReΩ, dImΩ = −2ω², dReΩ = 0 extended by Leibniz,
/// and d∘d = 0 is checked on every generator when the tables are built.
class NKAlgebra {
 public:
  static const NKAlgebra& instance();

  const Form& model(Generator g) const { return model_[index(g)]; }
  const Combination& product(Generator x, Generator y) const { return product_[index(x)][index(y)]; }
  const Combination& differential(Generator g) const { return d_[index(g)]; }
  const Combination& link_star(Generator g) const { return star_[index(g)]; }

  /// Expresses a model form in the generators of its degree; throws if it is
  /// not in their span.
  Combination decompose(const Form& f) const;

  static std::size_t index(Generator g) { return static_cast<std::size_t>(g); }

 private:
  NKAlgebra();
  std::array<Form, 6> model_;
  std::array<std::array<Combination, 6>, 6> product_;
  std::array<Combination, 6> d_;
  std::array<Combination, 6> star_;
};

ConeElement wedge(const ConeElement& x, const ConeElement& y);
ConeElement d(const ConeElement& x);
/// Hodge star of g_C = dr² + r²g_Σ oriented by dr∧r⁶vol_Σ.
ConeElement star(const ConeElement& x);

/// r²dr∧ω + r³ReΩ
ConeElement cone_phi();
/// ∗φ_C
ConeElement cone_psi();

/// Model form at radius r on R^7: dr ↦ e¹, link coframe e^i ↦ e^{i+1}.
/// `degree` fixes the degree of a zero element (and is checked otherwise).
Form realize(const ConeElement& x, const Scalar& r, int degree = -1);

/// Torsion of a cone 3-form at radius r, through g2::torsion_from_derivatives
/// with the symbolic dφ and d(∗φ). The form must induce the cone metric.
g2::TorsionClasses torsion_at(const ConeElement& phi, const Scalar& r);

/// κ∧ω₀² = 0 = κ∧Ω₀ on the flat model.
bool primitive_check(const Form& kappa);

}  // namespace holocalc::cones
