#include "holocalc/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "holocalc/examples.hpp"
#include "holocalc/form_json.hpp"
#include "holocalc/g2.hpp"
#include "holocalc/spectral.hpp"
#include "holocalc/verify.hpp"
#include "json.hpp"

namespace holocalc::cli {

namespace {

using nlohmann::json;

// Raised for malformed flags, values or config files (exit 64).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelGuard {
  bool active = false;
  ~ModelGuard() {
    if (active) g2::reset_model_phi();
  }
};

struct Options {
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::string config_path;
  bool timing = false;

  std::string suite;
  std::string form_text;
  std::string delta = "0";
  int m = 7;
  std::optional<int> window_k, window_n;
  std::optional<std::string> nu, nu_prime;
  int multiplicity = 1;
  int n = 0, k = 0;
  std::vector<long> dims;
  std::string family;
  std::optional<int> n_max;
  std::optional<long> max_weight, max_entry;
};

struct Config {
  json raw = json::object();
  int n_max = examples::kDefaultAnMax;
  long max_weight = examples::kDefaultMaxWeight;
  long max_entry = examples::kDefaultMaxWeight;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(what + " is not valid JSON: " + e.what());
  }
}

// {"phi0": <form>, "catalog": {"n_max": …, "max_weight": …, "max": …}}
Config load_config(const std::string& path, ModelGuard& guard) {
  Config c;
  if (path.empty()) return c;
  c.raw = parse_json(read_file(path), "config");
  if (!c.raw.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, value] : c.raw.items()) {
    if (key == "phi0") {
      g2::set_model_phi(form_from_json(value));
      guard.active = true;
    } else if (key == "catalog") {
      for (const auto& [ck, cv] : value.items()) {
        if (!cv.is_number_integer()) throw UsageError("config catalog." + ck + " must be an integer");
        if (ck == "n_max") c.n_max = cv.get<int>();
        else if (ck == "max_weight") c.max_weight = cv.get<long>();
        else if (ck == "max") c.max_entry = cv.get<long>();
        else throw UsageError("unknown config key catalog." + ck);
      }
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  return c;
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("HOLOCALC_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("HOLOCALC_SEED must be a nonnegative integer");
  }
  return 0;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

// Display width in code points (good enough for the symbols used here).
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

void print_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) w[c] = width(header[c]);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], width(r[c]));
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += r[c];
      if (c + 1 < r.size()) s += std::string(w[c] - width(r[c]) + 2, ' ');
    }
    s.erase(s.find_last_not_of(' ') + 1);
    out << s << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t c = 0; c < header.size(); ++c) rule.push_back(std::string(w[c], '-'));
  line(rule);
  for (const auto& r : rows) line(r);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// ---- commands ---------------------------------------------------------------

struct Outcome {
  std::vector<verify::CheckRecord> records;
  json result;  // null for verify
  std::vector<examples::ExampleRecord> catalog;
};

Outcome cmd_verify(const Options& o, std::uint64_t seed) {
  Outcome out;
  const std::vector<std::string> suites = o.suite == "all" ? verify::suite_names() : std::vector<std::string>{o.suite};
  for (const auto& s : suites) {
    auto recs = verify::run_suite(s, seed);
    out.records.insert(out.records.end(), recs.begin(), recs.end());
  }
  return out;
}

Outcome cmd_decompose(const Options& o) {
  const std::string text = !o.form_text.empty() && o.form_text[0] == '@' ? read_file(o.form_text.substr(1)) : o.form_text;
  const Form f = form_from_json(parse_json(text, "--form"));
  if (f.dim() != 7) throw DomainError("g2", "type decomposition needs a form on R^7");
  const g2::G2Data& g = g2::G2Data::flat();
  Outcome out;
  if (f.degree() == 2) {
    const g2::Split2 s = g2::project2(g, f);
    out.result = {{"degree", 2}, {"p7", to_json(s.p7)}, {"p14", to_json(s.p14)}};
  } else if (f.degree() == 3) {
    const g2::Split3 s = g2::project3(g, f);
    out.result = {{"degree", 3}, {"p1", to_json(s.p1)}, {"p7", to_json(s.p7)}, {"p27", to_json(s.p27)}};
  } else {
    throw DomainError("g2", "type decomposition is defined for 2- and 3-forms");
  }
  return out;
}

json surd_json(const spectral::Surd& s) { return {{"exact", s.to_string()}, {"approx", s.to_double()}}; }

spectral::Surd parse_rate(const std::string& text) {
  try {
    return spectral::Surd(parse_scalar(text));
  } catch (const DomainError&) {
    throw UsageError("rates must be rational, got '" + text + "'");
  }
}

Outcome cmd_indicial(const Options& o) {
  Scalar delta;
  try {
    delta = parse_scalar(o.delta);
  } catch (const DomainError&) {
    throw UsageError("--delta must be rational, got '" + o.delta + "'");
  }
  const auto [plus, minus] = spectral::indicial_roots_functions(delta, o.m);
  Outcome out;
  out.result = {{"delta", delta.get_str()}, {"m", o.m}, {"lambda_plus", surd_json(plus)}, {"lambda_minus", surd_json(minus)}};
  if (o.nu || o.nu_prime) {
    if (!o.nu || !o.nu_prime) throw UsageError("--nu and --nu-prime go together");
    const std::vector<spectral::IndicialDatum> roots{{plus, o.multiplicity}, {minus, o.multiplicity}};
    out.result["index_jump"] = spectral::index_jump(roots, parse_rate(*o.nu), parse_rate(*o.nu_prime));
  }
  if (o.window_k || o.window_n) {
    if (!o.window_k || !o.window_n) throw UsageError("--k and --n go together");
    const spectral::ExcludedWindows w = spectral::excluded_window(*o.window_k, *o.window_n);
    auto interval = [](const std::optional<spectral::Interval>& i) {
      return i ? json{{"lo", i->lo.get_str()}, {"hi", i->hi.get_str()}} : json(nullptr);
    };
    out.result["windows"] = {{"harmonic", interval(w.harmonic)},
                             {"closed_coclosed", interval(w.closed_coclosed)},
                             {"harmonic_is_closed_at", w.harmonic_is_closed_at ? json(w.harmonic_is_closed_at->get_str()) : json(nullptr)},
                             {"log_rate", w.log_rate.get_str()},
                             {"mirrored", w.mirrored}};
  }
  return out;
}

Outcome cmd_cohomology(const Options& o) {
  if (o.dims.size() != 4) throw UsageError("--dims takes four integers: H^k_c, H^k, im(H^k→H^k(Σ)), im(H^k_c→H^k)");
  const spectral::L2Dimensions r = spectral::l2_cohomology({o.n, o.k, o.dims[0], o.dims[1], o.dims[2], o.dims[3]});
  Outcome out;
  out.result = {{"minus", r.minus}, {"plus", r.plus}};
  return out;
}

Outcome cmd_catalog(const Options& o, const Config& c) {
  Outcome out;
  json range;
  if (o.family == "an") {
    const int n = o.n_max.value_or(c.n_max);
    out.catalog = examples::catalog_an(n);
    range = {{"n_max", n}};
  } else if (o.family == "wcp2") {
    const long w = o.max_weight.value_or(c.max_weight);
    out.catalog = examples::catalog_wcp2(w);
    range = {{"max_weight", w}};
  } else {
    const long m = o.max_entry.value_or(c.max_entry);
    out.catalog = examples::catalog_s3r4(m);
    range = {{"max", m}};
  }
  out.result = examples::catalog_json(o.family, range, out.catalog);
  return out;
}

// ---- output -------------------------------------------------------------------

void emit(std::ostream& os, const Options& o, const std::vector<std::string>& args, std::uint64_t seed,
          const std::string& config_hash, const Outcome& res) {
  long pass = 0, fail = 0, error = 0;
  for (const auto& r : res.records) {
    if (r.status == verify::Status::Pass) ++pass;
    else if (r.status == verify::Status::Fail) ++fail;
    else ++error;
  }

  if (o.format == "csv") {
    if (!res.catalog.empty() || o.family.size()) {
      os << examples::csv_header() << "\n";
      for (const auto& r : res.catalog) os << examples::to_csv(r) << "\n";
      return;
    }
    os << "name,status,detail" << (o.timing ? ",elapsed_ms" : "") << "\n";
    for (const auto& r : res.records) {
      os << r.name << "," << verify::status_name(r.status) << ",\"" << r.detail << "\"";
      if (o.timing) os << "," << std::fixed << std::setprecision(3) << r.elapsed_ms;
      os << "\n";
    }
    return;
  }

  if (o.format == "table") {
    if (!res.catalog.empty()) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : res.catalog) {
        std::string params, labels;
        for (const auto& [k, v] : r.parameters) {
          std::string t;
          for (long x : v) t += (t.empty() ? "" : ",") + std::to_string(x);
          params += (params.empty() ? "" : " ") + k + "=(" + t + ")";
        }
        for (const auto& [k, v] : r.labels) labels += (labels.empty() ? "" : " ") + k + "=" + v;
        rows.push_back({params, r.valid ? "yes" : "no", r.b2 ? std::to_string(*r.b2) : "", labels, r.tag.value_or(""),
                        r.valid ? "" : r.reasons.empty() ? "" : r.reasons.front()});
      }
      print_table(os, {"parameters", "valid", "b2", "labels", "tag", "reason"}, rows);
      os << res.catalog.size() << " records\n";
    } else if (!res.result.is_null()) {
      std::vector<std::vector<std::string>> rows;
      const json flat = res.result.flatten();
      for (const auto& item : flat.items()) rows.push_back({item.key().substr(1), scalar_text(item.value())});
      print_table(os, {"key", "value"}, rows);
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : res.records) {
        std::vector<std::string> row{r.name, verify::status_name(r.status), r.detail};
        if (o.timing) {
          std::ostringstream ms;
          ms << std::fixed << std::setprecision(1) << r.elapsed_ms;
          row.push_back(ms.str());
        }
        rows.push_back(row);
      }
      std::vector<std::string> header{"check", "status", "detail"};
      if (o.timing) header.push_back("ms");
      print_table(os, header, rows);
      os << "pass " << pass << "  fail " << fail << "  error " << error << "  total " << res.records.size() << "\n";
    }
    return;
  }

  json records = json::array();
  for (const auto& r : res.records) {
    json j = {{"name", r.name}, {"status", verify::status_name(r.status)}, {"detail", r.detail}};
    if (o.timing) j["elapsed_ms"] = r.elapsed_ms;
    records.push_back(j);
  }
  json report = {{"schema", "holocalc-report/1"},
                 {"command", join_args(args)},
                 {"seed", seed},
                 {"config_hash", config_hash},
                 {"records", records},
                 {"summary", {{"total", res.records.size()}, {"pass", pass}, {"fail", fail}, {"error", error}}}};
  if (!res.result.is_null()) report["result"] = res.result;
  os << report.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact G2/Spin(7) calculus, spectral calculators and example catalogs", "holocalc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json | table | csv")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--seed", o.seed, "seed for randomized checks (fallback: HOLOCALC_SEED, then 0)");
  app.add_option("--config", o.config_path, "JSON config overriding the model 3-form and catalog ranges");
  app.add_flag("--timing", o.timing, "include elapsed milliseconds per check");

  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  verify_cmd->add_option("suite", o.suite, "suite name or 'all'")->required()->check(CLI::IsMember(suites));

  auto* decompose_cmd = app.add_subcommand("decompose", "G2 type decomposition of a 2- or 3-form");
  decompose_cmd->add_option("--form", o.form_text, "form JSON, or @path")->required();

  auto* indicial_cmd = app.add_subcommand("indicial", "indicial roots of λ(λ+m−2) = δ");
  indicial_cmd->add_option("--delta", o.delta, "link eigenvalue (rational)");
  indicial_cmd->add_option("--m", o.m, "cone dimension");
  indicial_cmd->add_option("--k", o.window_k, "form degree for the excluded-rate windows");
  indicial_cmd->add_option("--n", o.window_n, "link dimension for the excluded-rate windows");
  indicial_cmd->add_option("--nu", o.nu, "lower weight for the index jump across both roots");
  indicial_cmd->add_option("--nu-prime", o.nu_prime, "upper weight for the index jump");
  indicial_cmd->add_option("--multiplicity", o.multiplicity, "multiplicity of each root");

  auto* cohomology_cmd = app.add_subcommand("cohomology", "weighted L² cohomology dimensions at rates −k∓δ");
  cohomology_cmd->add_option("--n", o.n, "link dimension")->required();
  cohomology_cmd->add_option("--k", o.k, "form degree")->required();
  cohomology_cmd->add_option("--dims", o.dims, "H^k_c,H^k,im(H^k→H^k(Σ)),im(H^k_c→H^k)")->required()->delimiter(',');

  auto* catalog_cmd = app.add_subcommand("catalog", "example catalogs");
  catalog_cmd->add_option("family", o.family, "an | wcp2 | s3r4")->required()->check(CLI::IsMember({"an", "wcp2", "s3r4"}));
  catalog_cmd->add_option("--n-max", o.n_max, "largest n for the Aₙ family (default 50)");
  catalog_cmd->add_option("--max-weight", o.max_weight, "largest weight for WCP² triples (default 30)");
  catalog_cmd->add_option("--max", o.max_entry, "largest entry for S³×ℝ⁴ actions (default 30)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "holocalc: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  ModelGuard guard;
  try {
    const Config config = load_config(o.config_path, guard);
    const std::uint64_t seed = resolve_seed(o);
    const std::string config_hash = "fnv1a64:" + hex64(verify::fnv1a(config.raw.dump()));

    Outcome res;
    if (verify_cmd->parsed()) res = cmd_verify(o, seed);
    else if (decompose_cmd->parsed()) res = cmd_decompose(o);
    else if (indicial_cmd->parsed()) res = cmd_indicial(o);
    else if (cohomology_cmd->parsed()) res = cmd_cohomology(o);
    else res = cmd_catalog(o, config);

    emit(out, o, args, seed, config_hash, res);
    for (const auto& r : res.records)
      if (r.status != verify::Status::Pass) return kExitFailures;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "holocalc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "holocalc: domain error [" << e.module() << "] " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace holocalc::cli
