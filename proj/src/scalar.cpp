#include "holocalc/scalar.hpp"

#include <cctype>

namespace holocalc {

namespace {

std::optional<mpz_class> integer_root(const mpz_class& value, unsigned long k) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  if (s.empty()) throw DomainError("exterior", "empty rational literal");

  const auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const std::size_t frac = s.size() - dot - 1;
      if (digits == "-" || digits == "+" || digits.empty()) throw std::invalid_argument(s);
      if (digits.front() == '+') digits.erase(digits.begin());
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      Scalar q(num, den);
      q.canonicalize();
      return q;
    }
    if (s.front() == '+') s.erase(s.begin());
    Scalar q(s, 10);
    if (q.get_den() == 0) throw DomainError("exterior", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("exterior", "malformed rational literal '" + std::string(text) + "'");
  }
}

std::string to_string(const Scalar& q) { return q.get_str(); }

std::optional<Scalar> exact_root(const Scalar& q, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (q < 0 && k % 2 == 0) return std::nullopt;
  const bool negative = q < 0;
  mpz_class num = abs(q.get_num());
  auto rn = integer_root(num, k);
  auto rd = integer_root(q.get_den(), k);
  if (!rn || !rd) return std::nullopt;
  Scalar r(negative ? mpz_class(-*rn) : *rn, *rd);
  r.canonicalize();
  return r;
}

Scalar pow(const Scalar& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("exterior", "zero raised to a negative power");
    return pow(Scalar(1) / base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace holocalc
