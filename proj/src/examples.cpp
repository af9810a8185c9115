#include "holocalc/examples.hpp"

#include <numeric>
#include <sstream>

namespace holocalc::examples {

namespace {

constexpr const char* kModule = "examples";

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple_string(const std::vector<long>& v) {
  std::vector<std::string> parts;
  for (long x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

}  // namespace

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  const Scalar &a = x[0], &b = x[1], &c = x[2], &d = x[3];
  const Scalar &e = y[0], &f = y[1], &g = y[2], &h = y[3];
  return {a * e - b * f - c * g - d * h, a * f + b * e + c * h - d * g, a * g - b * h + c * e + d * f,
          a * h + b * g - c * f + d * e};
}

std::string Quaternion::to_string() const {
  static const char* units[] = {"", "i", "j", "k"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < 4; ++n) {
    const Scalar& c = c_[n];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Scalar mag = abs(c);
    if (mag != 1 || n == 0) os << mag.get_str();
    os << units[n];
  }
  return first ? "0" : os.str();
}

ZetaVector::ZetaVector(int n, std::vector<long> zeta) : n_(n), zeta_(std::move(zeta)) {
  if (n_ < 2) throw DomainError(kModule, "Aₙ quotient needs n ≥ 2");
  if (zeta_.size() != static_cast<std::size_t>(n_ - 1))
    throw DomainError(kModule, "ζ must have n−1 = " + std::to_string(n_ - 1) + " entries");
}

long ZetaVector::weighted_sum() const {
  long s = 0;
  for (std::size_t i = 0; i < zeta_.size(); ++i) s += static_cast<long>(i + 1) * zeta_[i];
  return s;
}

bool an_genericity(const ZetaVector& z) {
  const auto& v = z.zeta();
  for (std::size_t i = 0; i < v.size(); ++i) {
    long s = 0;
    for (std::size_t j = i; j < v.size(); ++j)
      if ((s += v[j]) == 0) return false;
  }
  return true;
}

bool an_admissibility(const ZetaVector& z) { return std::gcd(z.weighted_sum(), static_cast<long>(z.n())) == 1; }

bool an_primitive(const ZetaVector& z) {
  long g = 0;
  for (long x : z.zeta()) g = std::gcd(g, x);
  return g == 1;
}

ZetaVector canonical_zeta(int n) {
  if (n < 2) throw DomainError(kModule, "Aₙ quotient needs n ≥ 2");
  std::vector<long> v(static_cast<std::size_t>(n - 1), 1);
  if (n > 2) v[0] = 2;
  if (n >= 4 && n % 2 == 0) v[static_cast<std::size_t>(n / 2 - 1)] = 2;
  return ZetaVector(n, std::move(v));
}

std::string an_diffeomorphism_label(int n) {
  if (n < 2) throw DomainError(kModule, "Aₙ quotient needs n ≥ 2");
  if (n == 2) return "S⁵";
  if (n == 3) return "S²×S³";
  return "#_" + std::to_string(n - 2) + "(S²×S³)";
}

ExampleRecord an_record(const ZetaVector& z) {
  ExampleRecord r;
  r.family = "An";
  r.parameters = {{"n", {z.n()}}, {"zeta", z.zeta()}, {"zeta_weighted_sum", {z.weighted_sum()}}};
  r.flags = {{"generic", an_genericity(z)}, {"admissible", an_admissibility(z)}, {"primitive_gcd", an_primitive(z)}};
  for (const char* f : {"generic", "admissible", "primitive_gcd"})
    if (!r.flags[f]) r.reasons.push_back(std::string(f) + " fails");
  if (!r.reasons.empty())
    throw DomainError(kModule, "Aₙ record for n = " + std::to_string(z.n()) + ", ζ = " + tuple_string(z.zeta()) +
                                   ": " + join(r.reasons, "; "));
  r.valid = true;
  r.b2 = z.n() - 2;
  r.labels["S"] = an_diffeomorphism_label(z.n());
  if (z.n() == 2) r.notes.push_back("b₂ = 0: the empty connected sum #_0(S²×S³) is rendered as S⁵");
  r.notes.push_back("an integral lift ζ̃ with ζ̃ᵢ − ζ̃ᵢ₊₁ = ζᵢ exists (fix ζ̃ₙ); no lift is singled out");
  return r;
}

ExampleRecord an_record(int n, const std::vector<long>& zeta) { return an_record(ZetaVector(n, zeta)); }

WeightTuple wcp2_from_weights(long p1, long p2, long p3) {
  if (p1 <= 0 || p2 <= 0 || p3 <= 0) throw DomainError(kModule, "weights must be positive");
  if (std::gcd(std::gcd(p1, p2), p3) != 1) throw DomainError(kModule, "weights must satisfy gcd(p₁,p₂,p₃) = 1");
  WeightTuple w{{p1, p2, p3}, {p2 + p3, p3 + p1, p1 + p2}};
  if ((p1 + p2 + p3) % 2 == 0) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (w.q[i] % 2)
        throw DomainError(kModule, "parity obstruction: even weight sum and 2q" + std::to_string(i + 1) + " = " +
                                       std::to_string(w.q[i]) + " is odd");
      w.q[i] /= 2;
    }
  }
  return w;
}

ExampleRecord s3r4_action(long p1, long p2, long q1, long q2) {
  ExampleRecord r;
  r.family = "S3R4";
  r.parameters = {{"p", {p1, p2}}, {"q", {q1, q2}}};
  const bool nonneg = p1 >= 0 && p2 >= 0 && q1 >= 0 && q2 >= 0;
  const bool balanced = p1 + p2 == q1 + q2;
  bool coprime = true;
  for (long p : {p1, p2})
    for (long q : {q1, q2})
      if (std::gcd(p, q) != 1) coprime = false;
  r.flags = {{"nonnegative", nonneg}, {"balanced", balanced}, {"primitive_gcd", coprime}};
  if (!nonneg) r.reasons.push_back("entries must be nonnegative");
  if (!balanced) r.reasons.push_back("p₁+p₂ ≠ q₁+q₂");
  for (long p : {p1, p2})
    for (long q : {q1, q2})
      if (std::gcd(p, q) != 1)
        r.reasons.push_back("gcd(" + std::to_string(p) + "," + std::to_string(q) + ") = " + std::to_string(std::gcd(p, q)));
  r.valid = r.reasons.empty();
  if (!r.valid) return r;
  r.labels["M"] = "S³×ℝ⁴";
  if (p1 == p2 && (q2 - q1) % 2 == 0 && q1 + q2 == 2 * p1) {
    const long p = p1, q = (q2 - q1) / 2;
    if (p > q && q > 0 && std::gcd(p, q) == 1) {
      r.tag = "Y^{" + std::to_string(p) + "," + std::to_string(q) + "}";
    } else if (q == 0) {
      r.notes.push_back("degenerate Y^{p,q} pattern with q = 0 (excluded from the tag)");
    }
  }
  return r;
}

std::vector<Quaternion> an_moment_map(const std::vector<Quaternion>& u) {
  std::vector<Quaternion> out;
  const Quaternion i = Quaternion::i();
  for (std::size_t k = 0; k + 1 < u.size(); ++k)
    out.push_back(u[k].conj() * i * u[k] - u[k + 1].conj() * i * u[k + 1]);
  return out;
}

ExampleRecord hp2_quotient_record(long p1, long p2, long p3) {
  const WeightTuple w = wcp2_from_weights(p1, p2, p3);
  ExampleRecord r;
  r.family = "WCP2";
  r.parameters = {{"p", {p1, p2, p3}}, {"q", {w.q[0], w.q[1], w.q[2]}}};
  r.flags = {{"primitive_gcd", true}, {"spin7_admissible", true}};
  r.valid = true;
  r.labels["Q"] = "WCP²[" + std::to_string(w.q[0]) + "," + std::to_string(w.q[1]) + "," + std::to_string(w.q[2]) + "]";
  r.labels["M"] = "V₂(ℂ³)×_{SU(2)}su₂";
  r.notes.push_back("weighted projective planes are circle quotients of S⁵, hence Spin(7)-admissible");
  return r;
}

nlohmann::json to_json(const ExampleRecord& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v.size() == 1 && k != "zeta" ? nlohmann::json(v[0]) : nlohmann::json(v);
  nlohmann::json j = {{"family", r.family}, {"parameters", params}, {"flags", r.flags},
                      {"valid", r.valid},   {"reasons", r.reasons},  {"labels", r.labels},
                      {"notes", r.notes}};
  j["b2"] = r.b2 ? nlohmann::json(*r.b2) : nlohmann::json(nullptr);
  j["tag"] = r.tag ? nlohmann::json(*r.tag) : nlohmann::json(nullptr);
  return j;
}

std::string csv_header() { return "family,parameters,valid,b2,labels,tag,reasons"; }

std::string to_csv(const ExampleRecord& r) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::vector<std::string> params, labels;
  for (const auto& [k, v] : r.parameters) params.push_back(k + "=" + tuple_string(v));
  for (const auto& [k, v] : r.labels) labels.push_back(k + "=" + v);
  return join({r.family, quote(join(params, " ")), r.valid ? "true" : "false", r.b2 ? std::to_string(*r.b2) : "",
               quote(join(labels, " ")), r.tag.value_or(""), quote(join(r.reasons, "; "))},
              ",");
}

std::vector<ExampleRecord> catalog_an(int n_max) {
  if (n_max < 2) throw DomainError(kModule, "n-max must be at least 2");
  std::vector<ExampleRecord> out;
  for (int n = 2; n <= n_max; ++n) out.push_back(an_record(canonical_zeta(n)));
  return out;
}

std::vector<ExampleRecord> catalog_wcp2(long max_weight) {
  if (max_weight < 1) throw DomainError(kModule, "max-weight must be positive");
  std::vector<ExampleRecord> out;
  for (long a = 1; a <= max_weight; ++a)
    for (long b = a; b <= max_weight; ++b)
      for (long c = b; c <= max_weight; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        try {
          out.push_back(hp2_quotient_record(a, b, c));
        } catch (const DomainError& e) {
          ExampleRecord r;
          r.family = "WCP2";
          r.parameters = {{"p", {a, b, c}}};
          r.flags = {{"primitive_gcd", true}};
          r.reasons.push_back(e.what());
          out.push_back(r);
        }
      }
  return out;
}

std::vector<ExampleRecord> catalog_s3r4(long max_entry) {
  if (max_entry < 1) throw DomainError(kModule, "max must be positive");
  std::vector<ExampleRecord> out;
  for (long p1 = 1; p1 <= max_entry; ++p1)
    for (long p2 = 1; p2 <= max_entry; ++p2)
      for (long q1 = 1; q1 <= max_entry; ++q1) {
        const long q2 = p1 + p2 - q1;
        if (q2 < 1 || q2 > max_entry) continue;
        out.push_back(s3r4_action(p1, p2, q1, q2));
      }
  return out;
}

nlohmann::json catalog_json(const std::string& family, const nlohmann::json& range,
                            const std::vector<ExampleRecord>& records) {
  nlohmann::json list = nlohmann::json::array();
  std::size_t valid = 0;
  for (const auto& r : records) {
    list.push_back(to_json(r));
    valid += r.valid;
  }
  return {{"schema", "holocalc-catalog/1"}, {"family", family}, {"range", range},
          {"count", records.size()},        {"valid", valid},   {"records", list}};
}

}  // namespace holocalc::examples
