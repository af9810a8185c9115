// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the holocalc package wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "holocalc/cli.hpp"
#include "holocalc/cones.hpp"
#include "holocalc/examples.hpp"
#include "holocalc/form_json.hpp"
#include "holocalc/g2.hpp"
#include "holocalc/spectral.hpp"
#include "holocalc/verify.hpp"

namespace py = pybind11;
using namespace holocalc;
using nlohmann::json;

namespace {

json record_json(const verify::CheckRecord& r) {
  return {{"name", r.name}, {"status", verify::status_name(r.status)}, {"detail", r.detail}};
}

std::string decompose(const std::string& form_json) {
  const Form f = form_from_json(json::parse(form_json));
  if (f.dim() != 7) throw DomainError("g2", "type decomposition needs a form on R^7");
  const g2::G2Data& g = g2::G2Data::flat();
  if (f.degree() == 2) {
    const g2::Split2 s = g2::project2(g, f);
    return json{{"p7", to_json(s.p7)}, {"p14", to_json(s.p14)}}.dump();
  }
  if (f.degree() == 3) {
    const g2::Split3 s = g2::project3(g, f);
    return json{{"p1", to_json(s.p1)}, {"p7", to_json(s.p7)}, {"p27", to_json(s.p27)}}.dump();
  }
  throw DomainError("g2", "type decomposition is defined for 2- and 3-forms");
}

std::string catalog(const std::string& family, long bound) {
  if (family == "an") return examples::catalog_json(family, {{"n_max", bound}}, examples::catalog_an(static_cast<int>(bound))).dump();
  if (family == "wcp2") return examples::catalog_json(family, {{"max_weight", bound}}, examples::catalog_wcp2(bound)).dump();
  if (family == "s3r4") return examples::catalog_json(family, {{"max", bound}}, examples::catalog_s3r4(bound)).dump();
  throw DomainError("examples", "unknown catalog family " + family);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("suite_names", &verify::suite_names);
  m.def("check_names", &verify::check_names, py::arg("suite"));
  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t seed) {
        json out = json::array();
        for (const auto& r : verify::run_suite(suite, seed)) out.push_back(record_json(r));
        return out.dump();
      },
      py::arg("suite"), py::arg("seed") = 0);
  m.def(
      "run_check", [](const std::string& name, std::uint64_t seed) { return record_json(verify::run_check(name, seed)).dump(); },
      py::arg("name"), py::arg("seed") = 0);

  m.def(
      "cli_run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));

  m.def(
      "indicial_roots",
      [](const std::string& delta, int m) {
        const auto [plus, minus] = spectral::indicial_roots_functions(parse_scalar(delta), m);
        return py::make_tuple(plus.to_string(), minus.to_string(), plus.to_double(), minus.to_double());
      },
      py::arg("delta"), py::arg("m"));
  m.def(
      "l2_cohomology",
      [](int n, int k, long compact, long absolute, long to_boundary, long compact_image) {
        const spectral::L2Dimensions d = spectral::l2_cohomology({n, k, compact, absolute, to_boundary, compact_image});
        return py::make_tuple(d.minus, d.plus);
      },
      py::arg("n"), py::arg("k"), py::arg("compact"), py::arg("absolute"), py::arg("to_boundary"), py::arg("compact_image"));

  m.def("decompose", &decompose, py::arg("form_json"));
  m.def("phi0", [] { return to_json(g2::phi0()).dump(); });
  m.def("psi0", [] { return to_json(g2::psi0()).dump(); });

  m.def("cone_phi", [] { return cones::cone_phi().to_string(); });
  m.def("cone_psi", [] { return cones::cone_psi().to_string(); });
  m.def("cone_d_phi_is_zero", [] { return cones::d(cones::cone_phi()).is_zero(); });

  m.def("canonical_zeta", [](int n) { return examples::canonical_zeta(n).zeta(); }, py::arg("n"));
  m.def(
      "an_record", [](int n, const std::vector<long>& zeta) { return examples::to_json(examples::an_record(n, zeta)).dump(); },
      py::arg("n"), py::arg("zeta"));
  m.def(
      "wcp2_from_weights",
      [](long p1, long p2, long p3) { return examples::wcp2_from_weights(p1, p2, p3).q; },
      py::arg("p1"), py::arg("p2"), py::arg("p3"));
  m.def(
      "s3r4_action",
      [](long p1, long p2, long q1, long q2) { return examples::to_json(examples::s3r4_action(p1, p2, q1, q2)).dump(); },
      py::arg("p1"), py::arg("p2"), py::arg("q1"), py::arg("q2"));
  m.def("catalog", &catalog, py::arg("family"), py::arg("bound"));
}
