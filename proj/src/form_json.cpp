#include "holocalc/form_json.hpp"

namespace holocalc {

namespace {

nlohmann::json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw DomainError("exterior", "bad integer in form JSON");
    return z;
  }
  throw DomainError("exterior", "expected an integer in form JSON");
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& q) {
  return {{"num", integer_to_json(q.get_num())}, {"den", integer_to_json(q.get_den())}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
  const mpz_class den = j.contains("den") ? integer_from_json(j.at("den")) : mpz_class(1);
  if (den == 0) throw DomainError("exterior", "zero denominator in form JSON");
  Scalar q(integer_from_json(j.at("num")), den);
  q.canonicalize();
  return q;
}

nlohmann::json to_json(const Form& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (Blade b : blades(f.dim(), f.degree())) {
    auto it = f.terms().find(b);
    if (it == f.terms().end()) continue;
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& [exps, coeff] : it->second.terms()) {
      nlohmann::json e = nlohmann::json::array();
      for (int i = 0; i < f.dim(); ++i) e.push_back(exps[static_cast<std::size_t>(i)]);
      nlohmann::json mono = scalar_to_json(coeff);
      mono["exp"] = e;
      poly.push_back(mono);
    }
    terms.push_back({{"idx", blade_indices(b)}, {"poly", poly}});
  }
  return {{"n", f.dim()}, {"k", f.degree()}, {"terms", terms}};
}

Form form_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    Form out(n, k);
    for (const auto& term : j.at("terms")) {
      auto idx = term.at("idx").get<std::vector<int>>();
      if (static_cast<int>(idx.size()) != k) throw DomainError("exterior", "index tuple length differs from degree");
      for (int i : idx)
        if (i < 1 || i > n) throw DomainError("exterior", "index out of range in form JSON");
      int inversions = 0;
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
          if (idx[a] > idx[b]) ++inversions;
      Poly p(n);
      for (const auto& mono : term.at("poly")) {
        Exponents e{};
        const auto exps = mono.contains("exp") ? mono.at("exp").get<std::vector<int>>() : std::vector<int>{};
        if (static_cast<int>(exps.size()) > n) throw DomainError("exterior", "exponent tuple longer than dimension");
        for (std::size_t i = 0; i < exps.size(); ++i) {
          if (exps[i] < 0 || exps[i] > 255) throw DomainError("exterior", "exponent out of range");
          e[i] = static_cast<std::uint8_t>(exps[i]);
        }
        p.add_term(e, scalar_from_json(mono));
      }
      if (inversions % 2) p = -p;
      out.add_term(blade_from_indices(idx), p);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("exterior", std::string("malformed form JSON: ") + e.what());
  }
}

}  // namespace holocalc
