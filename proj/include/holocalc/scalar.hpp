#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holocalc {

/// Exact rational scalar. GMP keeps every result in canonical reduced form.
using Scalar = mpq_class;

/// Error raised by a module when its input violates a mathematical
/// precondition. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw DomainError("exterior", "zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "p/q" or a finite decimal such as "-0.25".
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& q);

inline int sign(const Scalar& q) { return sgn(q); }

/// Exact k-th root of a rational when it exists (negative radicands allowed
/// for odd k).
std::optional<Scalar> exact_root(const Scalar& q, unsigned long k);

/// Exact square root of a nonnegative rational when it is a perfect square.
inline std::optional<Scalar> exact_sqrt(const Scalar& q) { return exact_root(q, 2); }

Scalar pow(const Scalar& base, int exponent);

}  // namespace holocalc
