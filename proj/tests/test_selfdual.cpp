#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dec4/selfdual.hpp"
#include "dec4/random.hpp"

using namespace dec4;

namespace {

template <class S>
Cochain<S> counterexample_pair(const Mat2<S>& x) {
  // Constant components on the time-1 plane and its complement solving
  // star(F) = -iF: the complement carries -i times the plane value.
  std::vector<typename Field<S>::Entry> raw;
  const Mat2<S> minus_i_x = Mat2<S>(S(ScalarOps<S>::zero() - ScalarOps<S>::imag_unit()) * x);
  Site k{0, 0, 0, 0};
  for (k[0] = 0; k[0] < 2; ++k[0])
    for (k[1] = 0; k[1] < 2; ++k[1])
      for (k[2] = 0; k[2] < 2; ++k[2])
        for (k[3] = 0; k[3] < 2; ++k[3]) {
          raw.emplace_back(Cell{k, degree_mask(2, 0)}, x);
          raw.emplace_back(Cell{k, degree_mask(2, 5)}, minus_i_x);
        }
  return make_periodic<S>(Field<S>::from_entries(std::move(raw)), kParityPeriods);
}

}  // namespace

TEST_CASE("mode metadata is consistent") {
  CHECK(std::string(to_string(DualityMode::selfdual_imag)) == "selfdual_i");
  CHECK(std::string(to_string(DualityMode::antiselfdual_imag)) == "antiselfdual_i");
  CHECK(std::string(to_string(DualityMode::selfdual_real)) == "selfdual_real");
  CHECK(std::string(to_string(DualityMode::antiselfdual_real)) == "antiselfdual_real");

  // The factor squares to -1 on the imaginary modes and +1 on the real
  // ones; the consequence sign is minus that square.
  for (DualityMode m : kDualityModes) {
    const GaussQ c = duality_factor<GaussQ>(m);
    const GaussQ square = c * c;
    CHECK(square == GaussQ(Rat64(-consequence_relation_sign(m))));
  }
  CHECK(printed_relation_sign(DualityMode::selfdual_imag) == 1);
  CHECK(printed_relation_sign(DualityMode::antiselfdual_imag) == -1);
  CHECK(printed_relation_sign(DualityMode::selfdual_real) == -1);
  CHECK(printed_relation_sign(DualityMode::antiselfdual_real) == 1);
}

TEST_CASE_TEMPLATE("constructed solutions satisfy the operator equation", S, GaussQ, Cplx) {
  Rng rng(311);
  for (DualityMode m : kDualityModes) {
    const Cochain<S> f = random_duality_solution<S>(rng, m);
    REQUIRE(!f.is_zero());
    CHECK(residual_vanishes(duality_residual(f, m)));
    // The solution space is linear.
    CHECK(residual_vanishes(duality_residual(ScalarOps<S>::from_int(3) * f, m)));
  }
}

TEST_CASE_TEMPLATE("operator solutions obey the diagonal-shift consequence", S, GaussQ,
                   Cplx) {
  Rng rng(313);
  for (DualityMode m : kDualityModes) {
    const Cochain<S> f = random_duality_solution<S>(rng, m);
    CHECK(residual_vanishes(diagonal_consequence_residual(f, m)));
    CHECK(double_star_sign_check(f, consequence_relation_sign(m)));
  }
}

TEST_CASE_TEMPLATE("printed pairing agrees with the consequence only on self modes", S,
                   GaussQ, Cplx) {
  Rng rng(317);
  for (DualityMode m : {DualityMode::selfdual_imag, DualityMode::selfdual_real}) {
    const Cochain<S> f = random_duality_solution<S>(rng, m);
    CHECK(residual_vanishes(diagonal_duality_residual(f, m)));
  }
  for (DualityMode m : {DualityMode::antiselfdual_imag, DualityMode::antiselfdual_real}) {
    const Cochain<S> f = random_duality_solution<S>(rng, m);
    CHECK(!residual_vanishes(diagonal_duality_residual(f, m)));
    CHECK(residual_vanishes(diagonal_consequence_residual(f, m)));
  }
}

TEST_CASE_TEMPLATE("explicit two-component counterexample", S, GaussQ, Cplx) {
  // Solves star(F) = -iF, yet the sum pairing F + F_shift is 2F, not zero:
  // the anti-mode pairing is not a consequence of the operator equation.
  const Cochain<S> f = counterexample_pair<S>(lie_basis<S>(0));
  CHECK(residual_vanishes(duality_residual(f, DualityMode::antiselfdual_imag)));
  CHECK(residual_vanishes(diagonal_consequence_residual(f, DualityMode::antiselfdual_imag)));
  const Cochain<S> printed = diagonal_duality_residual(f, DualityMode::antiselfdual_imag);
  CHECK(!printed.is_zero());
  // The defect is exactly twice the solution.
  CHECK(residual_vanishes(printed - (ScalarOps<S>::from_int(2) * f)));
}

TEST_CASE_TEMPLATE("diagonal pairing does not imply the operator equation", S, GaussQ,
                   Cplx) {
  // A single constant component satisfies every diagonal-shift pairing with
  // sign +1 but fails the operator equation, whose component pairings force
  // the complementary plane to be nonzero.
  std::vector<typename Field<S>::Entry> raw;
  Site k{0, 0, 0, 0};
  for (k[0] = 0; k[0] < 2; ++k[0])
    for (k[1] = 0; k[1] < 2; ++k[1])
      for (k[2] = 0; k[2] < 2; ++k[2])
        for (k[3] = 0; k[3] < 2; ++k[3])
          raw.emplace_back(Cell{k, degree_mask(2, 0)}, lie_basis<S>(1));
  const Cochain<S> f = make_periodic<S>(Field<S>::from_entries(std::move(raw)),
                                        kParityPeriods);
  CHECK(residual_vanishes(diagonal_duality_residual(f, DualityMode::selfdual_imag)));
  CHECK(!residual_vanishes(duality_residual(f, DualityMode::selfdual_imag)));
}

TEST_CASE_TEMPLATE("no nonzero finite-support solution exists", S, GaussQ, Cplx) {
  Rng rng(331);
  for (DualityMode m : kDualityModes) {
    const TrivialityReport empty =
        finite_support_triviality(Cochain<S>{}, m);
    CHECK(empty.satisfies);
    CHECK(!empty.witness);

    for (int trial = 0; trial < 25; ++trial) {
      Cochain<S> f = random_form<S>(rng, 2, Box{2, 2, 2, 2}, 50);
      while (f.is_zero()) f = random_form<S>(rng, 2, Box{2, 2, 2, 2}, 50);
      const TrivialityReport report = finite_support_triviality(f, m);
      CHECK(!report.satisfies);
      REQUIRE(report.witness);
      // The witness names a cell where the pairing residual is nonzero.
      const Cochain<S> resid = diagonal_duality_residual(f, m);
      CHECK(!mat_is_zero<S>(resid.value(*report.witness)));
    }
  }
}

TEST_CASE_TEMPLATE("connection-level residual matches the curvature pairing", S, GaussQ,
                   Cplx) {
  Rng rng(337);
  const Cochain<S> a = random_form<S>(rng, 1, Box{2, 2, 2, 2}, 70);
  for (DualityMode m : kDualityModes) {
    const Cochain<S> via_connection = duality_residual_from_connection(a, m);
    const Cochain<S> via_curvature = diagonal_duality_residual(curvature(a), m);
    CHECK(via_connection == via_curvature);
  }
}
