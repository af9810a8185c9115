#include "doctest.h"
#include "holocalc/examples.hpp"
#include "holocalc/linalg.hpp"
#include "holocalc/random.hpp"

using namespace holocalc;
using namespace holocalc::examples;

namespace {

// Left multiplication by a + bi + cj + dk on (1, i, j, k) coordinates.
Matrix left_matrix(const Quaternion& x) {
  const Scalar &a = x[0], &b = x[1], &c = x[2], &d = x[3];
  const Scalar rows[4][4] = {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
  Matrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 4; ++s) m(r, s) = rows[r][s];
  return m;
}

Quaternion via_matrix(const Quaternion& x, const Quaternion& y) {
  const Matrix m = left_matrix(x);
  Scalar out[4];
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 4; ++s) out[r] += m(r, s) * y[s];
  return {out[0], out[1], out[2], out[3]};
}

Quaternion random_quaternion(Rng& rng) { return {rng.rational(), rng.rational(), rng.rational(), rng.rational()}; }

}  // namespace

TEST_CASE("quaternion arithmetic") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k(), one(1);
  CHECK(i * i == Quaternion(-1));
  CHECK(j * j == Quaternion(-1));
  CHECK(k * k == Quaternion(-1));
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == Quaternion(0) - k);
  CHECK(i * j * k == Quaternion(-1));
  CHECK(one * i == i);
  CHECK(Quaternion(1, -2, make_scalar(1, 2), 0).to_string() == "1 - 2i + 1/2j");
  CHECK(Quaternion().to_string() == "0");

  Rng rng(211);
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion x = random_quaternion(rng), y = random_quaternion(rng), z = random_quaternion(rng);
    CHECK(x * y == via_matrix(x, y));
    CHECK(left_matrix(x) * left_matrix(y) == left_matrix(x * y));
    CHECK((x * y).conj() == y.conj() * x.conj());
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * y).norm2() == x.norm2() * y.norm2());
    CHECK(x * x.conj() == Quaternion(x.norm2()));
  }
}

TEST_CASE("Aₙ genericity and admissibility") {
  CHECK(an_genericity(ZetaVector(3, {2, 1})));
  CHECK(!an_genericity(ZetaVector(3, {1, -1})));
  CHECK(!an_genericity(ZetaVector(3, {0, 5})));
  CHECK(!an_genericity(ZetaVector(4, {1, 2, -2})));
  CHECK(an_genericity(ZetaVector(4, {1, -3, 1})));

  CHECK(ZetaVector(3, {2, 1}).weighted_sum() == 4);
  CHECK(an_admissibility(ZetaVector(3, {2, 1})));
  CHECK(!an_admissibility(ZetaVector(3, {1, 1})));
  CHECK(ZetaVector(4, {2, 2, 1}).weighted_sum() == 9);
  CHECK(an_admissibility(ZetaVector(4, {2, 2, 1})));

  CHECK_THROWS_AS(ZetaVector(1, {}), DomainError);
  CHECK_THROWS_AS(ZetaVector(3, {1}), DomainError);

  // Brute-force agreement with a direct subset-sum enumeration.
  Rng rng(223);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 7));
    std::vector<long> v(static_cast<std::size_t>(n - 1));
    for (long& x : v) x = rng.integer(-2, 2);
    bool generic = true;
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b <= v.size(); ++b) {
        long s = 0;
        for (std::size_t c = a; c < b; ++c) s += v[c];
        generic = generic && s != 0;
      }
    CHECK(an_genericity(ZetaVector(n, v)) == generic);
  }
}

TEST_CASE("canonical ζ") {
  CHECK(canonical_zeta(2).zeta() == std::vector<long>{1});
  CHECK(canonical_zeta(3).zeta() == std::vector<long>{2, 1});
  CHECK(canonical_zeta(4).zeta() == std::vector<long>{2, 2, 1});
  CHECK(canonical_zeta(5).zeta() == std::vector<long>{2, 1, 1, 1});
  CHECK(canonical_zeta(5).weighted_sum() == 11);
  CHECK(canonical_zeta(6).zeta() == std::vector<long>{2, 1, 2, 1, 1});
  CHECK(canonical_zeta(6).weighted_sum() == 19);
  for (int n = 2; n <= 200; ++n) {
    const ZetaVector z = canonical_zeta(n);
    CHECK(an_genericity(z));
    CHECK(an_admissibility(z));
    CHECK(an_primitive(z));
    const long closed = n % 2 ? static_cast<long>(n) * (n - 1) / 2 + 1 : static_cast<long>(n) * n / 2 + 1;
    CHECK(z.weighted_sum() == (n == 2 ? 1 : closed));
  }
  CHECK_THROWS_AS(canonical_zeta(1), DomainError);
}

TEST_CASE("Aₙ records") {
  const ExampleRecord r3 = an_record(3, {2, 1});
  CHECK(r3.valid);
  CHECK(r3.b2 == 1);
  CHECK(r3.labels.at("S") == "S²×S³");
  const ExampleRecord r2 = an_record(2, {1});
  CHECK(r2.b2 == 0);
  CHECK(r2.labels.at("S") == "S⁵");
  CHECK(r2.notes.size() == 2);
  CHECK(an_record(canonical_zeta(7)).labels.at("S") == "#_5(S²×S³)");
  CHECK(an_record(canonical_zeta(7)).b2 == 5);

  try {
    an_record(3, {1, 1});
    FAIL("expected an error");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("admissible fails") != std::string::npos);
    CHECK(msg.find("generic fails") == std::string::npos);
  }
  try {
    an_record(3, {0, 2});
    FAIL("expected an error");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("generic fails") != std::string::npos);
    CHECK(msg.find("primitive_gcd fails") != std::string::npos);
  }
}

TEST_CASE("weighted projective planes") {
  CHECK(wcp2_from_weights(1, 1, 1).q == std::array<long, 3>{2, 2, 2});
  CHECK(wcp2_from_weights(1, 1, 3).q == std::array<long, 3>{4, 4, 2});
  CHECK(wcp2_from_weights(2, 3, 4).q == std::array<long, 3>{7, 6, 5});
  try {
    wcp2_from_weights(1, 2, 3);
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("parity obstruction") != std::string::npos);
    CHECK(std::string(e.what()).find("2q1 = 5") != std::string::npos);
  }
  CHECK_THROWS_AS(wcp2_from_weights(2, 4, 6), DomainError);
  CHECK_THROWS_AS(wcp2_from_weights(0, 1, 1), DomainError);

  const ExampleRecord r = hp2_quotient_record(1, 1, 3);
  CHECK(r.valid);
  CHECK(r.flags.at("spin7_admissible"));
  CHECK(r.labels.at("Q") == "WCP²[4,4,2]");
  CHECK(r.labels.count("M") == 1);
  CHECK(hp2_quotient_record(1, 1, 1).labels.at("Q") == "WCP²[2,2,2]");
  CHECK_THROWS_AS(hp2_quotient_record(2, 4, 6), DomainError);

  // Odd sums: the q's satisfy q₁+q₂+q₃ = 2(p₁+p₂+p₃).
  for (long a = 1; a <= 9; ++a)
    for (long b = 1; b <= 9; ++b)
      for (long c = 1; c <= 9; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1 || (a + b + c) % 2 == 0) continue;
        const WeightTuple w = wcp2_from_weights(a, b, c);
        CHECK(w.q[0] + w.q[1] + w.q[2] == 2 * (a + b + c));
      }
}

TEST_CASE("circle actions on S³×ℝ⁴") {
  const ExampleRecord y21 = s3r4_action(2, 2, 1, 3);
  CHECK(y21.valid);
  CHECK(y21.tag == "Y^{2,1}");
  CHECK(y21.labels.at("M") == "S³×ℝ⁴");
  const ExampleRecord d = s3r4_action(1, 1, 1, 1);
  CHECK(d.valid);
  CHECK(!d.tag);
  CHECK(d.notes.size() == 1);
  const ExampleRecord bad = s3r4_action(2, 2, 2, 2);
  CHECK(!bad.valid);
  CHECK(!bad.reasons.empty());
  CHECK(bad.labels.empty());
  CHECK(!s3r4_action(1, 2, 1, 1).flags.at("balanced"));
  CHECK(s3r4_action(3, 3, 1, 5).tag == "Y^{3,2}");
  CHECK(!s3r4_action(4, 4, 2, 6).valid);
  CHECK(!s3r4_action(-1, 3, 1, 1).valid);
}

TEST_CASE("Aₙ moment map") {
  const Quaternion one(1), i = Quaternion::i(), j = Quaternion::j();
  for (const Quaternion& c : an_moment_map(std::vector<Quaternion>(5, one))) CHECK(c == Quaternion());
  const auto mu = an_moment_map({j, one});
  REQUIRE(mu.size() == 1);
  CHECK(mu[0] == Quaternion(0, -2));
  // Same value through the matrix representation.
  CHECK(mu[0] == via_matrix(via_matrix(j.conj(), i), j) - via_matrix(via_matrix(one, i), one));

  Rng rng(227);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 6));
    std::vector<Quaternion> u;
    for (int a = 0; a < n; ++a) u.push_back(random_quaternion(rng));
    const auto m = an_moment_map(u);
    CHECK(m.size() == static_cast<std::size_t>(n - 1));
    for (const auto& c : m) CHECK(c.is_imaginary());
    // Diagonal torus: left multiplication by unit complex numbers a + bi.
    std::vector<Quaternion> gu;
    for (const auto& x : u) {
      const Scalar t = rng.rational();
      const Scalar s = 1 + t * t;
      gu.push_back(Quaternion((1 - t * t) / s, 2 * t / s) * x);
    }
    CHECK(an_moment_map(gu) == m);
  }
}

TEST_CASE("catalogs") {
  const auto an = catalog_an(4);
  CHECK(an.size() == 3);
  const nlohmann::json j = catalog_json("an", {{"n_max", 4}}, an);
  CHECK(j["schema"] == "holocalc-catalog/1");
  CHECK(j["count"] == 3);
  CHECK(j["records"][1]["labels"]["S"] == "S²×S³");
  CHECK(j.dump() == catalog_json("an", {{"n_max", 4}}, catalog_an(4)).dump());

  const auto w = catalog_wcp2(6);
  for (const auto& r : w) {
    const auto& p = r.parameters[0].second;
    CHECK(r.valid == ((p[0] + p[1] + p[2]) % 2 == 1));
  }
  const auto s = catalog_s3r4(5);
  bool found = false;
  for (const auto& r : s) found = found || r.tag == "Y^{2,1}";
  CHECK(found);
  CHECK(to_csv(an[0]).rfind("An,", 0) == 0);
  CHECK_THROWS_AS(catalog_an(1), DomainError);
}
