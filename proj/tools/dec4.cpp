// Command line surface: run verification suites, evaluate residuals of a
// stored field configuration, and apply gauge transformations to
// configuration files. Exit codes: 0 success, 1 identity failure, 2 usage,
// validation or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dec4/config_io.hpp"
#include "dec4/report_json.hpp"
#include "dec4/verify.hpp"

namespace {

using namespace dec4;

std::string sniff_mode(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line, tok;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if ((ls >> tok) && tok == "mode") {
      std::string mode;
      ls >> mode;
      return mode;
    }
  }
  return "exact";  // let the parser produce the precise diagnostic
}

Box box_from_extents(const std::vector<std::int64_t>& extents) {
  if (extents.size() != 4)
    throw std::invalid_argument("--size wants four comma-separated extents");
  for (std::int64_t n : extents)
    if (n < 1) throw std::invalid_argument("--size extents must be positive");
  return Box{extents[0], extents[1], extents[2], extents[3]};
}

std::string size_text(const std::array<std::int64_t, kAxes>& n) {
  std::string s;
  for (int a = 0; a < kAxes; ++a) s += std::to_string(n[a]) + (a + 1 < kAxes ? "," : "");
  return s;
}

void print_report(const SuiteReport& r, bool omit_timings) {
  std::cout << "suite " << r.suite << "  mode " << (r.exact_mode ? "exact" : "float")
            << "  size " << size_text(r.size) << "  seeds " << r.seeds << "\n";
  int passed = 0;
  for (const IdentityCheck& c : r.checks) {
    passed += c.pass ? 1 : 0;
    std::cout << (c.pass ? "  [ PASS ] " : "  [ FAIL ] ") << c.name;
    if (c.exact_zero)
      std::cout << "  (exact zero)";
    else
      std::cout << "  (max residual " << verify_detail::fmt_mag(c.max_residual) << ")";
    if (!c.detail.empty()) std::cout << "  -- " << c.detail;
    std::cout << "\n";
  }
  std::cout << "suite " << r.suite << ": " << passed << "/" << r.checks.size()
            << " checks passed";
  if (!omit_timings) {
    std::cout << "  (" << verify_detail::fmt_mag(r.elapsed_seconds) << "s)";
  }
  std::cout << "\n";
}

template <class S>
int run_verify(const std::string& suite, const SuiteOptions& opts, bool json,
               bool omit_timings) {
  const std::vector<SuiteReport> reports = run_suites<S>(suite, opts);
  bool all = true;
  for (const SuiteReport& r : reports) all = all && r.pass();
  if (json) {
    std::cout << reports_to_json(reports, omit_timings);
  } else {
    for (const SuiteReport& r : reports) print_report(r, omit_timings);
    std::cout << "overall: " << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? 0 : 1;
}

template <class S>
Cochain<S> residual_of(const Cochain<S>& a, const std::string& which) {
  if (which == "v26") return ym_residual(a, DualVariant::conjugated);
  if (which == "v40") return ym_residual(a, DualVariant::double_starred);
  if (which == "bianchi") return bianchi_residual(a);
  if (which == "selfdual_i")
    return duality_residual_from_connection(a, DualityMode::selfdual_imag);
  if (which == "antiselfdual_i")
    return duality_residual_from_connection(a, DualityMode::antiselfdual_imag);
  if (which == "selfdual_real")
    return duality_residual_from_connection(a, DualityMode::selfdual_real);
  if (which == "antiselfdual_real")
    return duality_residual_from_connection(a, DualityMode::antiselfdual_real);
  throw std::invalid_argument(
      "unknown residual '" + which +
      "' (want v26, v40, bianchi, selfdual_i, antiselfdual_i, selfdual_real or "
      "antiselfdual_real)");
}

template <class S>
double sum_abs(const Cochain<S>& r) {
  double s = 0.0;
  const auto fold = [&](const Field<S>& f) {
    for (const auto& [cell, m] : f.entries())
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += ScalarOps<S>::magnitude(m(i, j));
  };
  fold(r.fin);
  fold(r.per);
  return s;
}

template <class S>
int run_residual(const std::string& path, const std::string& which, bool coefficients,
                 bool require_su2) {
  const FieldConfig<S> cfg = read_config_file<S>(path);
  if (require_su2) {
    const std::ptrdiff_t bad = first_non_algebra_record(cfg);
    if (bad >= 0) {
      std::cerr << "error: connection record " << bad
                << " is not anti-hermitian traceless (--require-su2)\n";
      return 2;
    }
  }
  const Cochain<S> r = residual_of<S>(cfg.connection(), which);
  std::cout << "residual " << which << "\n";
  std::cout << "mode " << (ScalarOps<S>::exact ? "exact" : "float") << "\n";
  if (cfg.periods) {
    std::cout << "lattice periodic";
    for (int a = 0; a < kAxes; ++a) std::cout << ' ' << (*cfg.periods)[a];
    std::cout << "\n";
  } else {
    std::cout << "lattice free\n";
  }
  const Field<S>& entries = cfg.periods ? r.per : r.fin;
  std::cout << "entries " << entries.entries().size() << "\n";
  std::cout << "exact-zero " << (r.is_zero() ? "true" : "false") << "\n";
  std::cout << "max " << config_detail::format_double(max_abs(r)) << "\n";
  std::cout << "sum " << config_detail::format_double(sum_abs(r)) << "\n";
  if (coefficients) {
    for (const auto& [cell, m] : entries.entries()) {
      std::ostringstream line;
      line << "coefficient " << to_string(cell);
      config_detail::write_matrix<S>(line, m);
      std::cout << line.str() << "\n";
    }
  }
  return 0;
}

/// Gauge 0-form sampled over the fundamental domain of the given periods.
template <class S>
Cochain<S> gauge_form_at(const GaugeField<S>& g, const Periods& p) {
  std::vector<typename Field<S>::Entry> raw;
  Site k{0, 0, 0, 0};
  for (k[0] = 0; k[0] < p[0]; ++k[0])
    for (k[1] = 0; k[1] < p[1]; ++k[1])
      for (k[2] = 0; k[2] < p[2]; ++k[2])
        for (k[3] = 0; k[3] < p[3]; ++k[3])
          raw.emplace_back(Cell{k, kEmptyMask}, g.value(k));
  return make_periodic<S>(Field<S>::from_entries(std::move(raw)), p);
}

template <class S>
int run_gauge(const std::string& in_path, const std::string& out_path, bool identity,
              bool check_theorem1) {
  FieldConfig<S> cfg = read_config_file<S>(in_path);

  GaugeField<S> g;
  if (!identity) {
    const std::optional<GaugeField<S>> from_file = cfg.gauge_field();
    if (!from_file) {
      std::cerr << "error: " << in_path
                << " has no gauge block; add one or pass --identity\n";
      return 2;
    }
    g = *from_file;
    if (!cfg.periods && cfg.gauge.kind == GaugeKind::parity) {
      std::cerr << "error: a parity gauge spreads a free-lattice connection over "
                   "the whole lattice; use constant or explicit gauges here\n";
      return 2;
    }
    if (cfg.periods && cfg.gauge.kind == GaugeKind::explicit_sites) {
      std::cerr << "error: explicit site overrides are not periodic; use constant "
                   "or parity gauges on periodic configurations\n";
      return 2;
    }
    if (cfg.periods && cfg.gauge.kind == GaugeKind::parity)
      for (int a = 0; a < kAxes; ++a)
        if ((*cfg.periods)[a] % 2 != 0) {
          std::cerr << "error: parity gauges on periodic configurations need even "
                       "extents\n";
          return 2;
        }
  }

  const Cochain<S> a = cfg.connection();
  Cochain<S> transformed;
  const auto conj_with_gauge = [&](const Cochain<S>& w) {
    if (!cfg.periods) return conjugate(g, w);
    const Cochain<S> hp = gauge_form_at<S>(g, *cfg.periods);
    const Cochain<S> hip = gauge_form_at<S>(g.inverse(), *cfg.periods);
    return cup(hp, cup(w, hip));
  };
  if (!cfg.periods) {
    transformed = gauge_transform(g, a);
  } else {
    const Cochain<S> hp = gauge_form_at<S>(g, *cfg.periods);
    const Cochain<S> hip = gauge_form_at<S>(g.inverse(), *cfg.periods);
    transformed = cup(hp, coboundary(hip)) + cup(hp, cup(a, hip));
  }

  int exit_code = 0;
  if (check_theorem1) {
    const bool compliant = g.double_shift_invariant();
    if (!compliant)
      std::cout << "warning: gauge is not double-shift invariant; residual "
                   "covariance is not guaranteed\n";
    const Cochain<S> defect = ym_residual(transformed, DualVariant::conjugated) -
                              conj_with_gauge(ym_residual(a, DualVariant::conjugated));
    const bool ok = residual_vanishes(defect);
    std::cout << "covariance check: " << (ok ? "PASS" : "FAIL") << "  (max defect "
              << verify_detail::fmt_mag(max_abs(defect)) << ")\n";
    if (compliant && !ok) exit_code = 1;
  }

  FieldConfig<S> out = cfg;
  out.gauge = GaugeSpec<S>{};
  out.records = records_from_connection<S>(transformed);
  write_config_file(out_path, out);
  std::cout << "wrote " << out_path << " (" << out.records.size() << " records)\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete exterior calculus on a 4D Minkowski lattice"};
  app.require_subcommand(1);

  std::string suite;
  std::vector<std::int64_t> extents{3, 3, 3, 3};
  int seeds = 25;
  bool use_exact = false;
  bool use_float = false;
  bool json = false;
  bool omit_timings = false;
  CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", suite, "suite name, or 'all'")->required();
  verify->add_option("--size", extents, "box extents as N,N,N,N")->delimiter(',');
  verify->add_option("--seeds", seeds, "random draws per check")
      ->check(CLI::PositiveNumber);
  CLI::Option* exact_flag =
      verify->add_flag("--exact", use_exact, "exact rational scalars (default)");
  verify->add_flag("--float", use_float, "floating point scalars")
      ->excludes(exact_flag);
  verify->add_flag("--json", json, "machine-readable report");
  verify->add_flag("--omit-timings", omit_timings,
                   "drop timings for byte-identical reports");

  std::string config_path;
  std::string which;
  bool coefficients = false;
  bool require_su2 = false;
  CLI::App* residual =
      app.add_subcommand("residual", "evaluate a residual of a stored configuration");
  residual->add_option("config", config_path, "configuration file")->required();
  residual
      ->add_option("which", which,
                   "one of v26, v40, bianchi, selfdual_i, antiselfdual_i, "
                   "selfdual_real, antiselfdual_real")
      ->required();
  residual->add_flag("--coefficients", coefficients, "print every coefficient");
  residual->add_flag("--require-su2", require_su2,
                     "reject connections outside the unitary algebra");

  std::string gauge_in;
  std::string gauge_out;
  bool identity = false;
  bool check_theorem1 = false;
  CLI::App* gauge =
      app.add_subcommand("gauge", "apply the configuration's gauge block");
  gauge->add_option("input", gauge_in, "input configuration")->required();
  gauge->add_option("output", gauge_out, "output configuration")->required();
  gauge->add_flag("--identity", identity, "apply the identity gauge");
  gauge->add_flag("--check-theorem1", check_theorem1,
                  "verify residual covariance under the gauge");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      SuiteOptions opts;
      opts.size = box_from_extents(extents);
      opts.seeds = seeds;
      return use_float ? run_verify<Cplx>(suite, opts, json, omit_timings)
                       : run_verify<GaussQ>(suite, opts, json, omit_timings);
    }
    if (residual->parsed()) {
      return sniff_mode(config_path) == "float"
                 ? run_residual<Cplx>(config_path, which, coefficients, require_su2)
                 : run_residual<GaussQ>(config_path, which, coefficients, require_su2);
    }
    if (gauge->parsed()) {
      return sniff_mode(gauge_in) == "float"
                 ? run_gauge<Cplx>(gauge_in, gauge_out, identity, check_theorem1)
                 : run_gauge<GaussQ>(gauge_in, gauge_out, identity, check_theorem1);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
