#include "holocalc/seifert.hpp"

namespace holocalc::seifert {

namespace {

constexpr const char* kModule = "seifert";

Metric adapted_metric(const Metric& gb) {
  const auto n = static_cast<std::size_t>(gb.dim());
  if (gb.orientation() != 1) throw DomainError(kModule, "base metric must carry the coordinate orientation");
  Matrix g(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gb.matrix()(i, j);
  g(n, n) = 1;
  // θ∧vol_B = (−1)^n e^1∧…∧e^n∧θ.
  return Metric(std::move(g), n % 2 == 0 ? 1 : -1);
}

Form empty() { return Form(); }

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

FiberedChart::FiberedChart(Metric base_metric, Form a) : g_b_(std::move(base_metric)), a_(std::move(a)) {
  const int n = g_b_.dim();
  if (n < kMinDim) throw DomainError(kModule, "base dimension must be at least 2");
  if (n + 1 > kMaxDim) throw DomainError(kModule, "base dimension too large for the total chart");
  if (a_.dim() != n || a_.degree() != 1) throw DomainError(kModule, "connection term must be a base 1-form");
  for (const auto& [b, p] : a_.terms())
    if (p.nvars() > n) throw DomainError(kModule, "connection term depends on the fiber coordinate");
  da_ = d(a_);
  g_ = adapted_metric(g_b_);
}

FiberedChart FiberedChart::flat(int n) { return FiberedChart(Metric::euclidean(n), Form(n, 1)); }

InvariantForm::InvariantForm(int n, int k)
    : n_(n), k_(k), alpha_(k >= 1 ? Form(n, k - 1) : empty()), beta_(k <= n ? Form(n, k) : empty()) {
  if (k < 0 || k > n + 1) throw DomainError(kModule, "degree out of range");
}

InvariantForm::InvariantForm(int n, int k, Form alpha, Form beta) : InvariantForm(n, k) {
  if (k >= 1) {
    if (alpha.dim() != n || alpha.degree() != k - 1) throw DomainError(kModule, "vertical part has the wrong type");
    alpha_ = std::move(alpha);
  } else if (!alpha.is_zero()) {
    throw DomainError(kModule, "a function has no vertical part");
  }
  if (k <= n) {
    if (beta.dim() != n || beta.degree() != k) throw DomainError(kModule, "basic part has the wrong type");
    beta_ = std::move(beta);
  } else if (!beta.is_zero()) {
    throw DomainError(kModule, "top-degree forms have no basic part");
  }
}

InvariantForm InvariantForm::basic(const Form& beta) {
  return InvariantForm(beta.dim(), beta.degree(), beta.degree() >= 1 ? Form(beta.dim(), beta.degree() - 1) : empty(), beta);
}

InvariantForm InvariantForm::vertical(const Form& alpha) {
  const int n = alpha.dim();
  const int k = alpha.degree() + 1;
  return InvariantForm(n, k, alpha, k <= n ? Form(n, k) : empty());
}

InvariantForm& InvariantForm::operator+=(const InvariantForm& rhs) {
  if (n_ != rhs.n_ || k_ != rhs.k_) throw DomainError(kModule, "adding invariant forms of different type");
  if (k_ >= 1) alpha_ += rhs.alpha_;
  if (k_ <= n_) beta_ += rhs.beta_;
  return *this;
}

InvariantForm& InvariantForm::operator-=(const InvariantForm& rhs) {
  if (n_ != rhs.n_ || k_ != rhs.k_) throw DomainError(kModule, "subtracting invariant forms of different type");
  if (k_ >= 1) alpha_ -= rhs.alpha_;
  if (k_ <= n_) beta_ -= rhs.beta_;
  return *this;
}

InvariantForm InvariantForm::operator-() const {
  InvariantForm out(n_, k_);
  out -= *this;
  return out;
}

Form to_total(const InvariantForm& g) {
  const int n = g.base_dim();
  const int k = g.degree();
  Form out(n + 1, k);
  if (k >= 1) out += wedge(Form::basis(n + 1, {n + 1}), g.alpha().lifted(n + 1));
  if (k <= n) out += g.beta().lifted(n + 1);
  return out;
}

InvariantForm from_total(int n, const Form& f) {
  if (f.dim() != n + 1) throw DomainError(kModule, "total form has the wrong dimension");
  const int k = f.degree();
  const Blade fiber = Blade{1} << n;
  Form alpha = k >= 1 ? Form(n, k - 1) : empty();
  Form beta = k <= n ? Form(n, k) : empty();
  for (const auto& [b, p] : f.terms()) {
    if (p.nvars() > n && !p.derivative(n).is_zero()) throw DomainError(kModule, "form depends on the fiber coordinate");
    const Poly q = p.restricted(n);
    if (b & fiber) {
      // e^I∧θ with |I| = k−1 equals (−1)^{k−1} θ∧e^I.
      alpha.add_term(b & ~fiber, sign_pow(k - 1) < 0 ? -q : q);
    } else {
      beta.add_term(b, q);
    }
  }
  return InvariantForm(n, k, std::move(alpha), std::move(beta));
}

Form fiber_contract(const InvariantForm& g) {
  if (g.degree() == 0) throw DomainError(kModule, "contraction of a function");
  return g.alpha();
}

InvariantForm exterior_d(const FiberedChart& c, const InvariantForm& g) {
  const int n = g.base_dim();
  const int k = g.degree();
  if (k == n + 1) throw DomainError(kModule, "exterior derivative of a top-degree form");
  // d(θ∧α + β) = θ∧(−dα) + (dθ∧α + dβ)
  Form alpha = k >= 1 ? -d(g.alpha()) : Form(n, k);
  Form beta = k + 1 <= n ? Form(n, k + 1) : empty();
  if (k + 1 <= n) {
    if (k >= 1) beta += wedge(c.curvature(), g.alpha());
    beta += d(g.beta());
  }
  return InvariantForm(n, k + 1, std::move(alpha), std::move(beta));
}

InvariantForm theta_wedge(const InvariantForm& g) {
  const int n = g.base_dim();
  if (g.degree() == n + 1) throw DomainError(kModule, "degree overflow");
  return InvariantForm::vertical(g.beta());
}

InvariantForm basic_wedge(const Form& b, const InvariantForm& g) {
  const int n = g.base_dim();
  const int k = g.degree() + b.degree();
  if (k > n + 1) throw DomainError(kModule, "degree overflow");
  // b∧θ∧α = (−1)^{|b|} θ∧b∧α
  Form alpha = k >= 1 ? Form(n, k - 1) : empty();
  Form beta = k <= n ? Form(n, k) : empty();
  if (g.degree() >= 1) {
    Form ba = wedge(b, g.alpha());
    alpha += sign_pow(b.degree()) < 0 ? -ba : ba;
  }
  if (g.degree() <= n && k <= n) beta += wedge(b, g.beta());
  return InvariantForm(n, k, std::move(alpha), std::move(beta));
}

InvariantForm total_star(const FiberedChart& c, const InvariantForm& g) {
  return from_total(g.base_dim(), hodge_star(to_total(g), c.total_metric()));
}

InvariantForm total_codiff(const FiberedChart& c, const InvariantForm& g) {
  const int big_n = g.base_dim() + 1;
  const int k = g.degree();
  if (k == 0) return InvariantForm(g.base_dim(), 0);
  InvariantForm out = total_star(c, exterior_d(c, total_star(c, g)));
  return sign_pow(big_n * (k - 1) + 1) < 0 ? -out : out;
}

InvariantForm adapted_d(const FiberedChart& c, const InvariantForm& g) {
  InvariantForm out = exterior_d(c, g);
  if (g.degree() >= 1 && g.degree() + 1 <= g.base_dim()) out -= InvariantForm::basic(wedge(c.curvature(), g.alpha()));
  return out;
}

Form transverse_star(const FiberedChart& c, const Form& beta) {
  if (beta.dim() != c.base_dim()) throw DomainError(kModule, "form does not live on the base");
  const InvariantForm full = total_star(c, InvariantForm::vertical(beta));
  if (!full.is_basic()) throw DomainError(kModule, "transverse star produced a non-basic form");
  return full.beta();
}

Form adapted_codiff(const FiberedChart& c, const Form& beta) {
  const int n = c.base_dim();
  const int k = beta.degree();
  if (k == 0) return Form(n, 0);
  Form out = transverse_star(c, d(transverse_star(c, beta)));
  return sign_pow(n * (k - 1) + 1) < 0 ? -out : out;
}

InvariantForm adapted_codiff_total(const FiberedChart& c, const Form& beta) {
  const int n = c.base_dim();
  const int k = beta.degree();
  const InvariantForm g = InvariantForm::basic(beta);
  if (k == 0) return InvariantForm(n, 0);
  InvariantForm out = total_codiff(c, g);
  if (c.curvature().is_zero()) return out;
  // The correction term dθ∧∗_Mγ has degree n+3−k; it is absent above n+1.
  if (2 + (n + 1 - k) <= n + 1) {
    const InvariantForm corr = theta_wedge(total_star(c, basic_wedge(c.curvature(), total_star(c, g))));
    if (sign_pow(k * (n + 1 - k)) < 0) out += corr;
    else out -= corr;
  }
  return out;
}

}  // namespace holocalc::seifert
