#include "holocalc/random.hpp"

namespace holocalc {

long Rng::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Scalar Rng::rational(long num_bound, long den_bound) {
  return make_scalar(integer(-num_bound, num_bound), integer(1, den_bound));
}

Scalar Rng::nonzero_rational(long num_bound, long den_bound) {
  long p = 0;
  while (p == 0) p = integer(-num_bound, num_bound);
  return make_scalar(p, integer(1, den_bound));
}

Poly Rng::poly(int nvars, int max_degree, int max_terms) {
  Poly p(nvars);
  const int terms = static_cast<int>(integer(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    const int degree = static_cast<int>(integer(0, max_degree));
    for (int j = 0; j < degree && nvars > 0; ++j) ++e[static_cast<std::size_t>(integer(0, nvars - 1))];
    p.add_term(e, nonzero_rational());
  }
  return p;
}

Form Rng::form(int n, int k, int max_degree, double density) {
  Form out(n, k);
  for (Blade b : blades(n, k))
    if (uniform01() < density) out.add_term(b, poly(n, max_degree));
  return out;
}

Form Rng::constant_form(int n, int k, double density) {
  Form out(n, k);
  for (Blade b : blades(n, k))
    if (uniform01() < density) out.add_term(b, Poly(n, nonzero_rational()));
  return out;
}

}  // namespace holocalc
