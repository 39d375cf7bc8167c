#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "dec4/report_json.hpp"
#include "dec4/verify.hpp"

using namespace dec4;

namespace {

SuiteOptions small_opts() {
  SuiteOptions opts;
  opts.size = Box{2, 2, 2, 2};
  opts.seeds = 2;
  return opts;
}

const IdentityCheck& find_check(const SuiteReport& r, const std::string& name) {
  for (const IdentityCheck& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check '" << name << "' in suite " << r.suite);
  static IdentityCheck dummy;
  return dummy;
}

template <class S>
SuiteReport run_one(const std::string& name, const SuiteOptions& opts) {
  std::vector<SuiteReport> rs = run_suites<S>(name, opts);
  REQUIRE(rs.size() == 1);
  return rs.front();
}

}  // namespace

TEST_CASE("identity suites pass in both scalar modes") {
  const SuiteOptions opts = small_opts();
  for (const char* name :
       {"leibniz", "bianchi", "gauge-covariance", "theorem1", "lemma2",
        "lemma2-converse", "adjointness", "theorem2", "lemma3", "star-laws",
        "oracle"}) {
    CAPTURE(name);
    const SuiteReport exact = run_one<GaussQ>(name, opts);
    CHECK(exact.pass());
    CHECK(exact.exact_mode);
    for (const IdentityCheck& c : exact.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
      CHECK(c.detail.empty());
    }
    const SuiteReport approx = run_one<Cplx>(name, opts);
    CHECK(approx.pass());
    CHECK_FALSE(approx.exact_mode);
  }
}

TEST_CASE("exact suites report identically-zero residuals") {
  const SuiteOptions opts = small_opts();
  for (const char* name : {"leibniz", "bianchi", "gauge-covariance", "oracle"}) {
    CAPTURE(name);
    const SuiteReport r = run_one<GaussQ>(name, opts);
    for (const IdentityCheck& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.exact_zero);
      CHECK(c.max_residual == 0.0);
    }
  }
}

TEST_CASE("star commutation suite records the degree boundary") {
  const SuiteReport r = run_one<GaussQ>("lemma1", small_opts());
  CHECK_FALSE(r.pass());
  CHECK(find_check(r, "commutes through star for arbitrary factors, degree 0").pass);
  for (int degree = 1; degree <= 4; ++degree) {
    const IdentityCheck& c = find_check(
        r, "commutes through star for arbitrary factors, degree " + std::to_string(degree));
    CHECK_FALSE(c.pass);
    CHECK(!c.detail.empty());
  }
  for (int degree = 0; degree <= 4; ++degree) {
    CHECK(find_check(r, "closed-form defect matches the operator residual, degree " +
                            std::to_string(degree))
              .pass);
    CHECK(find_check(r, "commutes for constant factors, degree " + std::to_string(degree))
              .pass);
  }
  CHECK(find_check(r, "commutes for total-parity factors on even degrees").pass);
}

TEST_CASE("duality suite records the printed-sign and converse boundaries") {
  const SuiteReport r = run_one<GaussQ>("selfdual", small_opts());
  CHECK_FALSE(r.pass());
  for (DualityMode mode : kDualityModes) {
    const std::string tag = to_string(mode);
    CHECK(find_check(r, "random construction solves the operator equation, " + tag).pass);
    CHECK(find_check(r, "operator solutions satisfy the forced diagonal relation, " + tag)
              .pass);
    const bool printed_matches =
        printed_relation_sign(mode) == consequence_relation_sign(mode);
    CHECK(find_check(r, "operator solutions satisfy the printed diagonal relation, " + tag)
              .pass == printed_matches);
    CHECK_FALSE(
        find_check(r, "printed diagonal relation forces the operator equation, " + tag)
            .pass);
  }
  CHECK(find_check(r, "double-star sign law on diagonal-compliant forms, both signs").pass);
  CHECK(find_check(r, "no nonzero finite-support form passes the triviality scan").pass);
}

TEST_CASE("margin suites reject degenerate extents") {
  SuiteOptions opts = small_opts();
  opts.size = Box{1, 3, 3, 3};
  CHECK_THROWS_AS(run_suites<GaussQ>("adjointness", opts), std::invalid_argument);
  CHECK_THROWS_AS(run_suites<GaussQ>("theorem2", opts), std::invalid_argument);
  CHECK_THROWS_AS(run_suites<GaussQ>("lemma3", opts), std::invalid_argument);
  CHECK_THROWS_AS(run_suites<GaussQ>("nonsense", small_opts()), std::invalid_argument);
}

TEST_CASE("the all suite covers every registered name in order") {
  SuiteOptions opts = small_opts();
  opts.seeds = 1;
  const std::vector<SuiteReport> rs = run_suites<GaussQ>("all", opts);
  REQUIRE(rs.size() == suite_names().size());
  for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs[i].suite == suite_names()[i]);
}

TEST_CASE("reports are deterministic for identical options") {
  const SuiteOptions opts = small_opts();
  for (const char* name : {"leibniz", "selfdual", "lemma1", "oracle"}) {
    CAPTURE(name);
    const std::string a = reports_to_json(run_suites<GaussQ>(name, opts), true);
    const std::string b = reports_to_json(run_suites<GaussQ>(name, opts), true);
    CHECK(a == b);
    const std::string c = reports_to_json(run_suites<Cplx>(name, opts), true);
    const std::string d = reports_to_json(run_suites<Cplx>(name, opts), true);
    CHECK(c == d);
  }
}
