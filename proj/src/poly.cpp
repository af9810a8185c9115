#include "holocalc/poly.hpp"

#include <sstream>

namespace holocalc {

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw DomainError("exterior", "polynomial variable count out of range");
}

Poly::Poly(int nvars, const Scalar& constant) : Poly(nvars) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw DomainError("exterior", "variable index out of range");
  Exponents e{};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(nvars, e, 1);
}

Poly Poly::monomial(int nvars, const Exponents& exps, const Scalar& coeff) {
  Poly p(nvars);
  p.add_term(exps, coeff);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Scalar Poly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::total_degree() const {
  int best = 0;
  for (const auto& [exps, coeff] : terms_) {
    int d = 0;
    for (auto e : exps) d += e;
    best = std::max(best, d);
  }
  return best;
}

void Poly::add_term(const Exponents& exps, const Scalar& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.nvars_ > nvars_) nvars_ = rhs.nvars_;
  for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.nvars_ > nvars_) nvars_ = rhs.nvars_;
  for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, -coeff);
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Poly Poly::derivative(int index) const {
  Poly out(nvars_);
  const auto i = static_cast<std::size_t>(index);
  for (const auto& [exps, coeff] : terms_) {
    if (exps[i] == 0) continue;
    Exponents e = exps;
    --e[i];
    out.add_term(e, coeff * exps[i]);
  }
  return out;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  Scalar sum = 0;
  for (const auto& [exps, coeff] : terms_) {
    Scalar term = coeff;
    for (int i = 0; i < nvars_; ++i) {
      const auto e = exps[static_cast<std::size_t>(i)];
      if (e > 0) term *= pow(point[static_cast<std::size_t>(i)], e);
    }
    sum += term;
  }
  return sum;
}

Poly Poly::extended(int nvars) const {
  Poly out = *this;
  out.nvars_ = std::max(nvars, nvars_);
  return out;
}

Poly Poly::restricted(int nvars) const {
  for (const auto& [exps, coeff] : terms_)
    for (int i = nvars; i < kMaxVars; ++i)
      if (exps[static_cast<std::size_t>(i)] != 0) throw DomainError("exterior", "polynomial depends on a dropped variable");
  Poly out = *this;
  out.nvars_ = nvars;
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    if (!first) os << (coeff < 0 ? " - " : " + ");
    else if (coeff < 0) os << "-";
    first = false;
    const Scalar mag = abs(coeff);
    bool has_var = false;
    for (auto e : exps) has_var = has_var || e > 0;
    if (mag != 1 || !has_var) os << mag.get_str();
    for (int i = 0; i < nvars_; ++i) {
      const auto e = exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      os << "x" << (i + 1);
      if (e > 1) os << "^" << static_cast<int>(e);
    }
  }
  return os.str();
}

}  // namespace holocalc
