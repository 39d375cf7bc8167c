#pragma once

// Text format for connection configurations. A file carries one 1-form
// (the connection) plus an optional gauge 0-form, either over the free
// lattice or over a torus with stated extents. Exact-mode components are
// rationals printed as p/q and reparsed verbatim; float components are
// printed with 17 significant digits, so a parse -> print -> parse cycle
// is bit-exact in both modes.
//
// Layout (tokens separated by blanks, one record per line):
//   dec4-config v1
//   mode exact|float
//   lattice free | lattice periodic n1 n2 n3 n4
//   seed <u64>
//   connection <count>
//   <k1> <k2> <k3> <k4> <axis 1..4> <re00> <im00> <re01> <im01> ...
//   gauge constant <8 components>
//   gauge parity <8 even components> <8 odd components>
//   gauge explicit <count>  (then per line: <k1..k4> <8 components>)

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dec4/cochain.hpp"
#include "dec4/gauge.hpp"
#include "dec4/matrix.hpp"

namespace dec4 {

struct ConfigError : std::runtime_error {
  ConfigError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// One connection record: a 1-form coefficient on the edge at site k along
/// `axis` (1-based, axis 1 being the time direction).
template <class S>
struct ConnectionRecord {
  Site k{};
  int axis = 1;
  Mat2<S> value;
};

enum class GaugeKind { none, constant, parity, explicit_sites };

template <class S>
struct GaugeSpec {
  GaugeKind kind = GaugeKind::none;
  Mat2<S> constant;                              // constant
  Mat2<S> even, odd;                             // parity
  std::vector<std::pair<Site, Mat2<S>>> sites;   // explicit_sites
};

template <class S>
struct FieldConfig {
  std::optional<Periods> periods;  // engaged in periodic lattice mode
  std::uint64_t seed = 0;
  std::vector<ConnectionRecord<S>> records;
  GaugeSpec<S> gauge;

  bool exact_mode() const { return ScalarOps<S>::exact; }

  /// The connection as a cochain: finite entries on the free lattice,
  /// periodic pattern entries in torus mode.
  Cochain<S> connection() const {
    std::vector<typename Field<S>::Entry> raw;
    raw.reserve(records.size());
    for (const ConnectionRecord<S>& r : records)
      raw.emplace_back(Cell{r.k, degree_mask(1, r.axis - 1)}, r.value);
    if (periods) return make_periodic<S>(Field<S>::from_entries(std::move(raw)), *periods);
    return make_finite<S>(std::move(raw));
  }

  /// The gauge 0-form, when present. Explicit sites ride on an identity
  /// background.
  std::optional<GaugeField<S>> gauge_field() const {
    switch (gauge.kind) {
      case GaugeKind::none: return std::nullopt;
      case GaugeKind::constant: return GaugeField<S>::constant(gauge.constant);
      case GaugeKind::parity: return GaugeField<S>::parity(gauge.even, gauge.odd);
      case GaugeKind::explicit_sites: {
        GaugeField<S> g;
        for (const auto& [site, m] : gauge.sites) g = g.with_override(site, m);
        return g;
      }
    }
    return std::nullopt;
  }
};

namespace config_detail {

inline constexpr const char* kMagic = "dec4-config";
inline constexpr const char* kVersion = "v1";

struct Cursor {
  std::istringstream in;
  int line;
  int field = 0;

  Cursor(std::string text, int line) : in(std::move(text)), line(line) {}

  std::string next(const char* what) {
    std::string tok;
    if (!(in >> tok))
      throw ConfigError(line, std::string("missing ") + what + " (field " +
                                  std::to_string(field + 1) + ")");
    ++field;
    return tok;
  }

  void done() {
    std::string extra;
    if (in >> extra)
      throw ConfigError(line, "unexpected trailing token '" + extra + "' (field " +
                                  std::to_string(field + 1) + ")");
  }
};

inline std::int64_t parse_int(Cursor& c, const char* what) {
  const std::string tok = c.next(what);
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(c.line, std::string("bad ") + what + " '" + tok + "' (field " +
                                  std::to_string(c.field) + ")");
  }
}

inline std::uint64_t parse_u64(Cursor& c, const char* what) {
  const std::string tok = c.next(what);
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(tok, &used);
    if (used != tok.size() || tok[0] == '-') throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(c.line, std::string("bad ") + what + " '" + tok + "' (field " +
                                  std::to_string(c.field) + ")");
  }
}

template <class S>
S parse_component(Cursor& c, const char* what) {
  if constexpr (ScalarOps<S>::exact) {
    const std::string re = c.next(what);
    const std::string im = c.next(what);
    try {
      return GaussQ(Rat64::parse(re), Rat64::parse(im));
    } catch (const std::exception& e) {
      throw ConfigError(c.line, std::string("bad ") + what + " near field " +
                                    std::to_string(c.field) + ": " + e.what());
    }
  } else {
    const std::string re = c.next(what);
    const std::string im = c.next(what);
    try {
      std::size_t ur = 0, ui = 0;
      const double dr = std::stod(re, &ur);
      const double di = std::stod(im, &ui);
      if (ur != re.size() || ui != im.size()) throw std::invalid_argument(re);
      return Cplx(dr, di);
    } catch (const std::exception&) {
      throw ConfigError(c.line, std::string("bad ") + what + " near field " +
                                    std::to_string(c.field));
    }
  }
}

template <class S>
Mat2<S> parse_matrix(Cursor& c) {
  Mat2<S> m;
  m(0, 0) = parse_component<S>(c, "matrix component");
  m(0, 1) = parse_component<S>(c, "matrix component");
  m(1, 0) = parse_component<S>(c, "matrix component");
  m(1, 1) = parse_component<S>(c, "matrix component");
  return m;
}

inline Site parse_site(Cursor& c) {
  Site k;
  for (int a = 0; a < kAxes; ++a) k[a] = parse_int(c, "site coordinate");
  return k;
}

inline std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

template <class S>
void write_component(std::ostream& out, const S& v) {
  if constexpr (ScalarOps<S>::exact)
    out << ' ' << v.re.str() << ' ' << v.im.str();
  else
    out << ' ' << format_double(v.real()) << ' ' << format_double(v.imag());
}

template <class S>
void write_matrix(std::ostream& out, const Mat2<S>& m) {
  write_component<S>(out, m(0, 0));
  write_component<S>(out, m(0, 1));
  write_component<S>(out, m(1, 0));
  write_component<S>(out, m(1, 1));
}

inline void write_site(std::ostream& out, const Site& k) {
  out << k[0] << ' ' << k[1] << ' ' << k[2] << ' ' << k[3];
}

}  // namespace config_detail

template <class S>
std::string write_config(const FieldConfig<S>& cfg) {
  using namespace config_detail;
  std::ostringstream out;
  out << kMagic << ' ' << kVersion << '\n';
  out << "mode " << (ScalarOps<S>::exact ? "exact" : "float") << '\n';
  if (cfg.periods) {
    out << "lattice periodic";
    for (int a = 0; a < kAxes; ++a) out << ' ' << (*cfg.periods)[a];
    out << '\n';
  } else {
    out << "lattice free\n";
  }
  out << "seed " << cfg.seed << '\n';
  out << "connection " << cfg.records.size() << '\n';
  for (const ConnectionRecord<S>& r : cfg.records) {
    write_site(out, r.k);
    out << ' ' << r.axis;
    write_matrix<S>(out, r.value);
    out << '\n';
  }
  switch (cfg.gauge.kind) {
    case GaugeKind::none: break;
    case GaugeKind::constant:
      out << "gauge constant";
      write_matrix<S>(out, cfg.gauge.constant);
      out << '\n';
      break;
    case GaugeKind::parity:
      out << "gauge parity";
      write_matrix<S>(out, cfg.gauge.even);
      write_matrix<S>(out, cfg.gauge.odd);
      out << '\n';
      break;
    case GaugeKind::explicit_sites:
      out << "gauge explicit " << cfg.gauge.sites.size() << '\n';
      for (const auto& [site, m] : cfg.gauge.sites) {
        write_site(out, site);
        write_matrix<S>(out, m);
        out << '\n';
      }
      break;
  }
  return out.str();
}

template <class S>
FieldConfig<S> parse_config(const std::string& text) {
  using namespace config_detail;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  const auto next_line = [&](const char* what) {
    while (std::getline(in, raw)) {
      ++line_no;
      if (raw.find_first_not_of(" \t\r") != std::string::npos)
        return Cursor(raw, line_no);
    }
    throw ConfigError(line_no, std::string("unexpected end of file, wanted ") + what);
  };

  FieldConfig<S> cfg;
  {
    Cursor c = next_line("header");
    if (c.next("magic") != kMagic || c.next("version") != kVersion)
      throw ConfigError(c.line, "not a dec4-config v1 file");
    c.done();
  }
  {
    Cursor c = next_line("mode");
    if (c.next("keyword") != "mode") throw ConfigError(c.line, "expected 'mode'");
    const std::string mode = c.next("mode name");
    const std::string want = ScalarOps<S>::exact ? "exact" : "float";
    if (mode != "exact" && mode != "float")
      throw ConfigError(c.line, "unknown mode '" + mode + "'");
    if (mode != want)
      throw ConfigError(c.line, "file is in " + mode + " mode, expected " + want);
    c.done();
  }
  {
    Cursor c = next_line("lattice");
    if (c.next("keyword") != "lattice") throw ConfigError(c.line, "expected 'lattice'");
    const std::string kind = c.next("lattice kind");
    if (kind == "periodic") {
      Periods p;
      for (int a = 0; a < kAxes; ++a) {
        const std::int64_t n = parse_int(c, "extent");
        if (n < 1) throw ConfigError(c.line, "extent must be at least 1");
        p[a] = n;
      }
      cfg.periods = p;
    } else if (kind != "free") {
      throw ConfigError(c.line, "unknown lattice kind '" + kind + "'");
    }
    c.done();
  }
  {
    Cursor c = next_line("seed");
    if (c.next("keyword") != "seed") throw ConfigError(c.line, "expected 'seed'");
    cfg.seed = parse_u64(c, "seed");
    c.done();
  }
  {
    Cursor c = next_line("connection");
    if (c.next("keyword") != "connection")
      throw ConfigError(c.line, "expected 'connection'");
    const std::int64_t count = parse_int(c, "record count");
    if (count < 0) throw ConfigError(c.line, "negative record count");
    c.done();
    cfg.records.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
      Cursor rc = next_line("connection record");
      ConnectionRecord<S> rec;
      rec.k = parse_site(rc);
      const std::int64_t axis = parse_int(rc, "axis");
      if (axis < 1 || axis > kAxes)
        throw ConfigError(rc.line, "axis must be 1..4, got " + std::to_string(axis));
      rec.axis = static_cast<int>(axis);
      rec.value = parse_matrix<S>(rc);
      rc.done();
      if (cfg.periods)
        for (int a = 0; a < kAxes; ++a)
          if (rec.k[a] < 0 || rec.k[a] >= (*cfg.periods)[a])
            throw ConfigError(rc.line, "site outside the fundamental domain");
      cfg.records.push_back(std::move(rec));
    }
  }
  // Optional trailing gauge block.
  while (std::getline(in, raw)) {
    ++line_no;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    Cursor c(raw, line_no);
    const std::string kw = c.next("keyword");
    if (kw != "gauge") throw ConfigError(c.line, "unexpected record '" + kw + "'");
    if (cfg.gauge.kind != GaugeKind::none)
      throw ConfigError(c.line, "duplicate gauge block");
    const std::string kind = c.next("gauge kind");
    if (kind == "constant") {
      cfg.gauge.kind = GaugeKind::constant;
      cfg.gauge.constant = parse_matrix<S>(c);
      c.done();
    } else if (kind == "parity") {
      cfg.gauge.kind = GaugeKind::parity;
      cfg.gauge.even = parse_matrix<S>(c);
      cfg.gauge.odd = parse_matrix<S>(c);
      c.done();
    } else if (kind == "explicit") {
      cfg.gauge.kind = GaugeKind::explicit_sites;
      const std::int64_t count = parse_int(c, "site count");
      if (count < 0) throw ConfigError(c.line, "negative site count");
      c.done();
      for (std::int64_t i = 0; i < count; ++i) {
        Cursor sc = next_line("gauge site");
        const Site site = parse_site(sc);
        const Mat2<S> m = parse_matrix<S>(sc);
        sc.done();
        cfg.gauge.sites.emplace_back(site, m);
      }
    } else {
      throw ConfigError(c.line, "unknown gauge kind '" + kind + "'");
    }
  }
  return cfg;
}

template <class S>
FieldConfig<S> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config<S>(buf.str());
}

template <class S>
void write_config_file(const std::string& path, const FieldConfig<S>& cfg) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << write_config<S>(cfg);
  if (!out) throw std::runtime_error("write failed on " + path);
}

/// Rebuild records from a cochain (used when writing transformed output):
/// 1-form entries sorted by cell, axes back to 1-based.
template <class S>
std::vector<ConnectionRecord<S>> records_from_connection(const Cochain<S>& a) {
  if (a.periods && !a.fin.empty())
    throw std::invalid_argument(
        "dec4: connection mixes finite and periodic support");
  std::vector<ConnectionRecord<S>> out;
  const Field<S>& src = a.periods ? a.per : a.fin;
  for (const auto& [cell, v] : src.entries()) {
    if (mask_degree(cell.mask) != 1)
      throw std::invalid_argument("dec4: connection must be a 1-form");
    out.push_back(ConnectionRecord<S>{cell.k, mask_slot(cell.mask) + 1, v});
  }
  return out;
}

/// Validate that every connection coefficient lies in the unitary algebra
/// (anti-hermitian traceless); returns the first offending record index or
/// -1 when all pass.
template <class S>
std::ptrdiff_t first_non_algebra_record(const FieldConfig<S>& cfg, double tol = 1e-10) {
  for (std::size_t i = 0; i < cfg.records.size(); ++i) {
    const Mat2<S>& m = cfg.records[i].value;
    const Mat2<S> skew = Mat2<S>(dagger<S>(m) + m);
    const S tr = m.trace();
    const bool ok = ScalarOps<S>::exact
                        ? (mat_is_zero<S>(skew) && ScalarOps<S>::is_zero(tr))
                        : (mat_max_abs<S>(skew) <= tol && ScalarOps<S>::magnitude(tr) <= tol);
    if (!ok) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

}  // namespace dec4
