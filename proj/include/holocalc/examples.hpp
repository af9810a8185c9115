#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holocalc/scalar.hpp"
#include "json.hpp"

namespace holocalc::examples {

/// a + b i + c j + d k over the rationals.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(const Scalar& a, const Scalar& b = 0, const Scalar& c = 0, const Scalar& d = 0)  // NOLINT
      : c_{a, b, c, d} {}
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Scalar& operator[](std::size_t n) const { return c_[n]; }
  const Scalar& real() const { return c_[0]; }
  bool is_imaginary() const { return c_[0] == 0; }
  Quaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  Scalar norm2() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]; }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  bool operator==(const Quaternion&) const = default;

  std::string to_string() const;

 private:
  std::array<Scalar, 4> c_{};
};

/// (ζ₁, …, ζ_{n−1}) for the Aₙ quotient; |ζ| is computed on demand.
class ZetaVector {
 public:
  ZetaVector(int n, std::vector<long> zeta);
  int n() const { return n_; }
  const std::vector<long>& zeta() const { return zeta_; }
  /// Σ i·ζᵢ
  long weighted_sum() const;
  bool operator==(const ZetaVector&) const = default;

 private:
  int n_;
  std::vector<long> zeta_;
};

/// Every contiguous sum ζᵢ + … + ζᵢ₊ⱼ is nonzero.
bool an_genericity(const ZetaVector& z);
/// gcd(|ζ|, n) = 1
bool an_admissibility(const ZetaVector& z);
/// gcd(ζ₁, …, ζ_{n−1}) = 1
bool an_primitive(const ZetaVector& z);
/// (1) for n = 2; (2,1,…,1) for odd n; for even n ≥ 4 the same with a
/// second 2 at coordinate n/2.
ZetaVector canonical_zeta(int n);

struct ExampleRecord {
  std::string family;  // "An" | "WCP2" | "S3R4"
  std::vector<std::pair<std::string, std::vector<long>>> parameters;
  std::map<std::string, bool> flags;
  bool valid = false;
  std::vector<std::string> reasons;  // failing conditions when invalid
  std::optional<int> b2;
  std::map<std::string, std::string> labels;
  std::optional<std::string> tag;
  std::vector<std::string> notes;
};

/// Throws when any of genericity, admissibility, primitivity fails; the
/// message lists every failing condition.
ExampleRecord an_record(const ZetaVector& z);
ExampleRecord an_record(int n, const std::vector<long>& zeta);

/// "#_{n−2}(S²×S³)" with the small cases "S²×S³" (n = 3) and "S⁵" (n = 2).
std::string an_diffeomorphism_label(int n);

struct WeightTuple {
  std::array<long, 3> p;
  std::array<long, 3> q;
  bool operator==(const WeightTuple&) const = default;
};

/// qᵢ = pⱼ + pₖ for odd p₁+p₂+p₃, qᵢ = (pⱼ + pₖ)/2 for even sums (an error
/// whenever a half is not an integer).
WeightTuple wcp2_from_weights(long p1, long p2, long p3);

/// Circle actions on S³×ℝ⁴: p₁+p₂ = q₁+q₂ and gcd(pᵢ, qⱼ) = 1; tags
/// Y^{p,q} for p₁ = p₂ = p, q₁ = p−q, q₂ = p+q, p > q > 0, gcd(p,q) = 1.
/// Never throws; failures are recorded as reasons.
ExampleRecord s3r4_action(long p1, long p2, long q1, long q2);

/// μ(u)_k = ū_k i u_k − ū_{k+1} i u_{k+1}, k = 1 … n−1.
std::vector<Quaternion> an_moment_map(const std::vector<Quaternion>& u);

ExampleRecord hp2_quotient_record(long p1, long p2, long p3);

nlohmann::json to_json(const ExampleRecord& r);
std::string csv_header();
std::string to_csv(const ExampleRecord& r);

inline constexpr int kDefaultAnMax = 50;
inline constexpr long kDefaultMaxWeight = 30;

/// Canonical records for n = 2 … n_max.
std::vector<ExampleRecord> catalog_an(int n_max = kDefaultAnMax);
/// Coprime triples p₁ ≤ p₂ ≤ p₃ ≤ max_weight; parity failures are kept as
/// invalid records.
std::vector<ExampleRecord> catalog_wcp2(long max_weight = kDefaultMaxWeight);
/// Balanced tuples with every entry in 1 … max_entry.
std::vector<ExampleRecord> catalog_s3r4(long max_entry = kDefaultMaxWeight);

/// {"schema":"holocalc-catalog/1","family":…,"range":{…},"count":…,"records":[…]}
nlohmann::json catalog_json(const std::string& family, const nlohmann::json& range,
                            const std::vector<ExampleRecord>& records);

}  // namespace holocalc::examples
