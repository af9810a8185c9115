#include "holocalc/spectral.hpp"

#include <cmath>
#include <sstream>

namespace holocalc::spectral {

namespace {

constexpr const char* kModule = "spectral";

int sgn(const Scalar& x) { return mpq_sgn(x.get_mpq_t()); }

// Sign of x + y√d.
int sign2(const Scalar& x, const Scalar& y, const mpz_class& d) {
  const int sx = sgn(x), sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const Scalar diff = x * x - y * y * Scalar(d);
  if (diff > 0) return sx;
  if (diff < 0) return sy;
  return 0;
}

// Sign of x + y√d + z√e.
int sign3(const Scalar& x, const Scalar& y, const mpz_class& d, const Scalar& z, const mpz_class& e) {
  if (d == e) return sign2(x, y + z, d);
  const int sa = sign2(x, y, d), sz = sgn(z);
  if (sz == 0) return sa;
  if (sa == 0 || sa == sz) return sz;
  // |x + y√d| against |z√e| through (x + y√d)² − z²e.
  const int s = sign2(x * x + y * y * Scalar(d) - z * z * Scalar(e), 2 * x * y, d);
  if (s > 0) return sa;
  if (s < 0) return sz;
  return 0;
}

}  // namespace

Surd::Surd(const Scalar& p, const Scalar& q, const mpz_class& d) : p_(p), q_(q), d_(d) {
  if (d_ <= 0) throw DomainError(kModule, "radicand must be positive");
  if (q_ == 0) {
    d_ = 1;
    return;
  }
  for (unsigned long f = 2; f < 1000000 && mpz_class(f * f) <= d_; ++f) {
    const mpz_class sq = mpz_class(f) * f;
    while (mpz_divisible_p(d_.get_mpz_t(), sq.get_mpz_t())) {
      d_ /= sq;
      q_ *= f;
    }
  }
  if (mpz_perfect_square_p(d_.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
    q_ *= Scalar(root);
    d_ = 1;
  }
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
}

Surd Surd::sqrt(const Scalar& x) {
  if (x < 0) throw DomainError(kModule, "square root of a negative rational");
  if (x == 0) return Surd();
  // √(a/b) = √(ab)/b
  const mpz_class a = x.get_num(), b = x.get_den();
  return Surd(0, Scalar(1) / Scalar(b), a * b);
}

int compare(const Surd& a, const Surd& b) {
  return sign3(a.p_ - b.p_, a.q_, a.d_, -b.q_, b.d_);
}

double Surd::to_double() const { return p_.get_d() + q_.get_d() * std::sqrt(d_.get_d()); }

std::string Surd::to_string() const {
  if (is_rational()) return p_.get_str();
  std::ostringstream os;
  if (p_ != 0) os << p_.get_str() << (q_ < 0 ? " - " : " + ");
  else if (q_ < 0) os << "-";
  const Scalar mag = abs(q_);
  if (mag != 1) os << mag.get_str() << "*";
  os << "sqrt(" << d_.get_str() << ")";
  return os.str();
}

std::pair<Surd, Surd> indicial_roots_functions(const Scalar& delta, int m) {
  if (delta < 0) throw DomainError(kModule, "link eigenvalue must be nonnegative");
  if (m < 2) throw DomainError(kModule, "cone dimension must be at least 2");
  const Scalar shift = m - 2;
  const Surd root = Surd::sqrt(shift * shift + 4 * delta);
  const Scalar half = make_scalar(1, 2);
  return {(root + Scalar(-shift)) * half, (root * Scalar(-1) + Scalar(-shift)) * half};
}

ExcludedWindows excluded_window(int k, int n) {
  if (n < 1 || k < 0 || k > n) throw DomainError(kModule, "degree must satisfy 0 ≤ k ≤ n");
  ExcludedWindows w;
  w.log_rate = make_scalar(-n, 2) - 1;
  int kk = k;
  if (2 * k > n) {
    kk = n - k;
    w.mirrored = true;
  }
  if (2 * kk <= n - 2) w.harmonic = Interval{Scalar(-n + kk + 2), Scalar(-kk)};
  if (2 * kk < n) w.closed_coclosed = Interval{Scalar(-n + kk), Scalar(-kk)};
  if (2 * kk <= n - 2 || 2 * kk == n) w.harmonic_is_closed_at = Scalar(-kk);
  return w;
}

int index_jump(const std::vector<IndicialDatum>& roots, const Surd& nu, const Surd& nu_prime) {
  if (!(nu < nu_prime)) throw DomainError(kModule, "index jump needs ν < ν′");
  int total = 0;
  for (const auto& r : roots) {
    if (r.multiplicity < 1) throw DomainError(kModule, "root multiplicity must be positive");
    if (r.lambda == nu || r.lambda == nu_prime) throw DomainError(kModule, "weight is an indicial root");
    if (nu < r.lambda && r.lambda < nu_prime) total += r.multiplicity;
  }
  return total;
}

L2Dimensions l2_cohomology(const CohomologyInput& c) {
  if (c.n < 1 || c.k < 0 || c.k > c.n) throw DomainError(kModule, "degree must satisfy 0 ≤ k ≤ n");
  if (c.compact < 0 || c.absolute < 0 || c.to_boundary < 0 || c.compact_image < 0)
    throw DomainError(kModule, "cohomology dimensions must be nonnegative");
  if (c.compact_image > std::min(c.compact, c.absolute))
    throw DomainError(kModule, "im(H^k_c → H^k) exceeds dim H^k_c or dim H^k");
  if (c.to_boundary > c.absolute) throw DomainError(kModule, "im(H^k → H^k(Σ)) exceeds dim H^k");
  if (2 * c.k < c.n) return {c.compact, c.compact + c.to_boundary};
  if (2 * c.k == c.n) return {c.compact_image, c.compact_image + 2 * c.to_boundary};
  return {c.compact_image, c.absolute};
}

L2Dimensions l2_cohomology(const CohomologyInput& c, const std::vector<IndicialDatum>& roots, const Scalar& delta) {
  if (delta <= 0) throw DomainError(kModule, "δ must be positive");
  const Surd centre(Scalar(-c.k));
  const Surd lo = centre + Scalar(-delta), hi = centre + delta;
  for (const auto& r : roots)
    if (!(r.lambda < lo) && !(hi < r.lambda) && !(r.lambda == centre))
      throw DomainError(kModule, "δ is not small: another indicial root lies within δ of −k");
  return l2_cohomology(c);
}

}  // namespace holocalc::spectral
