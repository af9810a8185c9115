#include <cmath>

#include "doctest.h"
#include "holocalc/random.hpp"
#include "holocalc/spectral.hpp"

using namespace holocalc;
using namespace holocalc::spectral;

namespace {

// λ² + (m−2)λ − δ evaluated exactly on p + q√d.
Surd characteristic(const Surd& l, int m, const Scalar& delta) {
  const Scalar& p = l.rational_part();
  const Scalar& q = l.surd_coefficient();
  const Scalar d(l.radicand());
  return Surd(p * p + q * q * d + (m - 2) * p - delta, 2 * p * q + (m - 2) * q, l.radicand());
}

}  // namespace

TEST_CASE("indicial roots of the cone Laplacian on functions") {
  auto r = indicial_roots_functions(0, 7);
  CHECK(r.first == Surd(0));
  CHECK(r.second == Surd(-5));
  r = indicial_roots_functions(6, 7);
  CHECK(r.first == Surd(1));
  CHECK(r.second == Surd(-6));
  r = indicial_roots_functions(14, 7);
  CHECK(r.first == Surd(2));
  CHECK(r.second == Surd(-7));
  r = indicial_roots_functions(1, 7);
  CHECK(!r.first.is_rational());
  CHECK(r.first.to_string() == "-5/2 + 1/2*sqrt(29)");
  CHECK(r.second.to_string() == "-5/2 - 1/2*sqrt(29)");
  CHECK(indicial_roots_functions(make_scalar(9, 4), 2).first == Surd(make_scalar(3, 2)));

  Rng rng(131);
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar delta = abs(rng.rational(20, 4));
    const int m = static_cast<int>(rng.integer(2, 11));
    const auto [plus, minus] = indicial_roots_functions(delta, m);
    CHECK(characteristic(plus, m, delta) == Surd(0));
    CHECK(characteristic(minus, m, delta) == Surd(0));
    // Vieta, computed on the surd parts.
    CHECK(plus.rational_part() + minus.rational_part() == -(m - 2));
    if (!plus.is_rational()) {
      CHECK(plus.radicand() == minus.radicand());
      CHECK(plus.surd_coefficient() == -minus.surd_coefficient());
    }
    const Scalar prod = plus.rational_part() * minus.rational_part() -
                        plus.surd_coefficient() * minus.surd_coefficient() * Scalar(minus.radicand()) * Scalar(-1);
    const Scalar cross = plus.rational_part() * minus.surd_coefficient() + minus.rational_part() * plus.surd_coefficient();
    CHECK(prod == -delta);
    CHECK(cross == 0);
    const double disc = std::pow(m - 2, 2) + 4 * delta.get_d();
    CHECK(plus.to_double() == doctest::Approx((-(m - 2) + std::sqrt(disc)) / 2));
    CHECK(!(plus < minus));
  }
  CHECK_THROWS_AS(indicial_roots_functions(-1, 7), DomainError);
  CHECK_THROWS_AS(indicial_roots_functions(1, 1), DomainError);
}

TEST_CASE("exact surd comparison") {
  CHECK(Surd(0, 1, 8) == Surd(0, 2, 2));
  CHECK(Surd(0, 1, 9) == Surd(3));
  CHECK(Surd(1, 1, 2) < Surd(0, 1, 6));  // 2.414 < 2.449
  CHECK(Surd(0, 1, 6) < Surd(make_scalar(5, 2)));
  Rng rng(137);
  for (int trial = 0; trial < 500; ++trial) {
    const Surd a(rng.rational(), rng.rational(), rng.integer(1, 30));
    const Surd b(rng.rational(), rng.rational(), rng.integer(1, 30));
    const double diff = a.to_double() - b.to_double();
    if (std::abs(diff) < 1e-9) continue;
    CHECK(compare(a, b) == (diff > 0 ? 1 : -1));
    CHECK(compare(b, a) == (diff > 0 ? -1 : 1));
  }
  CHECK_THROWS_AS(Surd(0, 1, 0), DomainError);
  CHECK_THROWS_AS(Surd::sqrt(-1), DomainError);
}

TEST_CASE("excluded rate windows") {
  ExcludedWindows w = excluded_window(2, 6);
  REQUIRE(w.harmonic);
  CHECK(*w.harmonic == Interval{-2, -2});
  CHECK(w.harmonic->is_empty());
  REQUIRE(w.closed_coclosed);
  CHECK(*w.closed_coclosed == Interval{-4, -2});
  CHECK(w.harmonic_is_closed_at == Scalar(-2));

  w = excluded_window(0, 6);
  CHECK(*w.closed_coclosed == Interval{-6, 0});
  CHECK(*w.harmonic == Interval{-4, 0});
  // The function roots {0, −5} at m = 7 avoid the harmonic window.
  for (const Surd& root : {Surd(0), Surd(-5)})
    CHECK(!(Surd(w.harmonic->lo) < root && root < Surd(w.harmonic->hi)));

  w = excluded_window(3, 6);
  CHECK(!w.harmonic);
  CHECK(!w.closed_coclosed);
  CHECK(w.harmonic_is_closed_at == Scalar(-3));
  CHECK(w.log_rate == Scalar(-4));
  CHECK(!w.mirrored);

  w = excluded_window(3, 7);
  CHECK(!w.harmonic);
  CHECK(*w.closed_coclosed == Interval{-4, -3});
  CHECK(!w.harmonic_is_closed_at);
  CHECK(w.log_rate == make_scalar(-9, 2));

  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      ExcludedWindows a = excluded_window(k, n);
      ExcludedWindows b = excluded_window(n - k, n);
      CHECK(a.mirrored == (2 * k > n));
      a.mirrored = b.mirrored = false;
      CHECK(a == b);
    }
  CHECK_THROWS_AS(excluded_window(7, 6), DomainError);
  CHECK_THROWS_AS(excluded_window(-1, 6), DomainError);
}

TEST_CASE("index jumps") {
  const std::vector<IndicialDatum> roots{{Surd(0), 1}, {Surd(-5), 1}};
  CHECK(index_jump(roots, Surd(-6), Surd(make_scalar(1, 2))) == 2);
  CHECK(index_jump(roots, Surd(-4), Surd(make_scalar(-1, 2))) == 0);
  CHECK_THROWS_AS(index_jump(roots, Surd(-5), Surd(0)), DomainError);
  CHECK_THROWS_AS(index_jump(roots, Surd(1), Surd(-1)), DomainError);
  CHECK_THROWS_AS(index_jump({{Surd(0), 0}}, Surd(-1), Surd(1)), DomainError);
  try {
    index_jump(roots, Surd(-5), Surd(1));
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("weight is an indicial root") != std::string::npos);
  }

  Rng rng(139);
  int checked = 0;
  while (checked < 100) {
    std::vector<IndicialDatum> list;
    const long count = rng.integer(0, 6);
    for (long i = 0; i < count; ++i) {
      const auto pair = indicial_roots_functions(abs(rng.rational(20, 3)), static_cast<int>(rng.integer(2, 9)));
      list.push_back({rng.coin() ? pair.first : pair.second, static_cast<int>(rng.integer(1, 4))});
    }
    std::vector<Surd> w;
    for (int i = 0; i < 3; ++i) w.emplace_back(rng.rational(12, 7));
    std::sort(w.begin(), w.end());
    if (!(w[0] < w[1]) || !(w[1] < w[2])) continue;
    bool hit = false;
    for (const auto& r : list)
      for (const auto& x : w) hit = hit || r.lambda == x;
    if (hit) continue;
    CHECK(index_jump(list, w[0], w[2]) == index_jump(list, w[0], w[1]) + index_jump(list, w[1], w[2]));
    ++checked;
  }
}

TEST_CASE("weighted L2 cohomology") {
  CHECK(l2_cohomology({6, 2, 0, 0, 0, 0}) == L2Dimensions{0, 0});
  CHECK(l2_cohomology({6, 2, 1, 1, 1, 0}) == L2Dimensions{1, 2});
  CHECK(l2_cohomology({6, 3, 0, 1, 1, 0}) == L2Dimensions{0, 2});
  CHECK(l2_cohomology({6, 4, 3, 2, 1, 1}) == L2Dimensions{1, 2});

  Rng rng(149);
  for (int trial = 0; trial < 200; ++trial) {
    CohomologyInput c;
    c.n = static_cast<int>(rng.integer(1, 9));
    c.k = static_cast<int>(rng.integer(0, c.n));
    c.compact = rng.integer(0, 5);
    c.absolute = rng.integer(0, 5);
    c.to_boundary = rng.integer(0, c.absolute);
    c.compact_image = rng.integer(0, std::min(c.compact, c.absolute));
    const L2Dimensions d = l2_cohomology(c);
    CHECK(d.plus >= d.minus);
    CHECK(d.minus >= 0);
  }

  CHECK_THROWS_AS(l2_cohomology({6, 2, 1, 1, 2, 0}), DomainError);
  CHECK_THROWS_AS(l2_cohomology({6, 2, 0, 1, 0, 1}), DomainError);
  CHECK_THROWS_AS(l2_cohomology({6, 2, -1, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(l2_cohomology({6, 7, 0, 0, 0, 0}), DomainError);

  const std::vector<IndicialDatum> roots{{Surd(-2), 1}, {Surd(-4), 1}, {Surd(0), 1}};
  CHECK(l2_cohomology({6, 2, 1, 1, 1, 0}, roots, make_scalar(1, 2)) == L2Dimensions{1, 2});
  CHECK_THROWS_AS(l2_cohomology({6, 2, 1, 1, 1, 0}, roots, 2), DomainError);
  CHECK_THROWS_AS(l2_cohomology({6, 2, 1, 1, 1, 0}, roots, 0), DomainError);
}
