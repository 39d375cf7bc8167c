#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dec4/hodge.hpp"
#include "dec4/oracle.hpp"
#include "dec4/random.hpp"

using namespace dec4;

namespace {

// Hand-derived dual sign for every direction mask, indexed by the mask
// value: the sign epsilon(M) with star e_M^k = epsilon(M) e_{M^c}^{k+1_M}.
constexpr int kExpectedStarSign[16] = {
    +1,  // 0x0
    -1,  // 0x1 {0}
    -1,  // 0x2 {1}
    -1,  // 0x3 {0,1}
    +1,  // 0x4 {2}
    +1,  // 0x5 {0,2}
    +1,  // 0x6 {1,2}
    -1,  // 0x7 {0,1,2}
    -1,  // 0x8 {3}
    -1,  // 0x9 {0,3}
    -1,  // 0xA {1,3}
    +1,  // 0xB {0,1,3}
    +1,  // 0xC {2,3}
    -1,  // 0xD {0,2,3}
    -1,  // 0xE {1,2,3}
    -1,  // 0xF
};

// Double-star sign by degree: the metric determinant times the reordering
// parity of splitting the four axes into M and its complement twice.
constexpr int kExpectedDoubleStarSign[5] = {-1, +1, -1, +1, -1};

template <class S>
Mat2<S> probe(int seed) {
  Rng rng(static_cast<std::uint64_t>(seed) + 11);
  return random_matrix<S>(rng);
}

}  // namespace

TEST_CASE("star sign table matches the hand-derived duals") {
  for (int m = 0; m < 16; ++m) {
    CAPTURE(m);
    CHECK(star_sign(static_cast<DirMask>(m)) == kExpectedStarSign[m]);
  }
}

TEST_CASE_TEMPLATE("star maps each basis cell to its signed dual cell", S, GaussQ, Cplx) {
  const Site k{2, -1, 0, 3};
  for (int m = 0; m < 16; ++m) {
    const auto mask = static_cast<DirMask>(m);
    const Mat2<S> v = probe<S>(m);
    const Cochain<S> e = make_finite<S>({{Cell{k, mask}, v}});
    const Cochain<S> se = star(e);

    const Cell dual{shifted_mask(k, mask, +1), mask_complement(mask)};
    Mat2<S> expect = v;
    if (kExpectedStarSign[m] < 0) expect = -expect;
    REQUIRE(se.fin.entries().size() == 1);
    CHECK(mat_equal<S>(se.value(dual), expect));
  }
}

TEST_CASE_TEMPLATE("star inverse undoes star in both orders", S, GaussQ, Cplx) {
  Rng rng(42);
  const Box box{2, 2, 2, 2};
  for (int degree = 0; degree <= 4; ++degree) {
    const Cochain<S> phi = random_form<S>(rng, degree, box, 70);
    CHECK(star_inverse(star(phi)) == phi);
    CHECK(star(star_inverse(phi)) == phi);
  }
  for (int degree = 0; degree <= 4; ++degree) {
    const Cochain<S> phi = random_periodic_form<S>(rng, degree, Periods{2, 4, 2, 2}, 70);
    CHECK(star_inverse(star(phi)) == phi);
    CHECK(star(star_inverse(phi)) == phi);
  }
}

TEST_CASE_TEMPLATE("double star shifts by the diagonal with a degree sign", S, GaussQ, Cplx) {
  const Site k{0, 5, -2, 1};
  for (int m = 0; m < 16; ++m) {
    const auto mask = static_cast<DirMask>(m);
    const int degree = mask_degree(mask);
    CHECK(double_star_sign(mask) == kExpectedDoubleStarSign[degree]);

    const Mat2<S> v = probe<S>(m + 16);
    const Cochain<S> e = make_finite<S>({{Cell{k, mask}, v}});
    Mat2<S> expect = v;
    if (kExpectedDoubleStarSign[degree] < 0) expect = -expect;
    const Cochain<S> want = make_finite<S>({{Cell{shifted_all(k, +1), mask}, expect}});
    CHECK(double_star(e) == want);
  }
}

TEST_CASE_TEMPLATE("cell cup its star recovers the metric-signed volume", S, GaussQ, Cplx) {
  // e_M cup star(e_M) lands on the volume cell at the base site with the
  // squared value, negated exactly when the mask carries the time axis.
  const Site k{1, 2, 3, 4};
  for (int m = 0; m < 16; ++m) {
    const auto mask = static_cast<DirMask>(m);
    const Mat2<S> v = probe<S>(m + 32);
    const Cochain<S> e = make_finite<S>({{Cell{k, mask}, v}});
    const Cochain<S> prod = cup(e, star(e));
    REQUIRE(prod.fin.entries().size() == 1);
    Mat2<S> expect = v * v;
    if (time_signature(mask) < 0) expect = -expect;
    CHECK(mat_equal<S>(prod.value(Cell{k, kFullMask}), expect));
  }
}

TEST_CASE_TEMPLATE("star agrees with the search oracle", S, GaussQ, Cplx) {
  Rng rng(7);
  const Box box{2, 3, 2, 2};
  for (int degree = 0; degree <= 4; ++degree) {
    const Cochain<S> phi = random_form<S>(rng, degree, box, 60);
    CHECK(star(phi) == oracle_star(phi));
  }
  const Cochain<S> mixed = random_form<S>(rng, 1, box, 40) + random_form<S>(rng, 3, box, 40);
  CHECK(star(mixed) == oracle_star(mixed));
  for (int degree = 0; degree <= 4; ++degree) {
    const Cochain<S> phi = random_periodic_form<S>(rng, degree, Periods{2, 2, 4, 2}, 60);
    CHECK(star(phi) == oracle_star(phi));
  }
}

TEST_CASE_TEMPLATE("zero-form factors pass through star unchanged", S, GaussQ, Cplx) {
  Rng rng(19);
  const Box box{3, 3, 3, 3};
  const Cochain<S> h = random_form<S>(rng, 0, box, 80);
  for (int degree = 0; degree <= 4; ++degree) {
    const Cochain<S> f = random_form<S>(rng, degree, Box{2, 2, 2, 2}, 70);
    CHECK(residual_vanishes(star_commutation_residual(h, f) -
                            star_commutation_closed_form(h, f)));
  }
}

TEST_CASE_TEMPLATE("star commutation holds for constant factors", S, GaussQ, Cplx) {
  Rng rng(23);
  const Mat2<S> c = random_matrix<S>(rng);
  // Constant zero-form over a box large enough to cover f and its duals.
  std::vector<typename Field<S>::Entry> raw;
  const Box cover{6, 6, 6, 6};
  cover.for_each_site([&](const Site& k) {
    raw.emplace_back(Cell{Site{k[0] - 2, k[1] - 2, k[2] - 2, k[3] - 2}, kEmptyMask}, c);
  });
  const Cochain<S> h = make_finite<S>(std::move(raw));
  for (int degree = 0; degree <= 4; ++degree) {
    const Cochain<S> f = random_form<S>(rng, degree, Box{2, 2, 2, 2}, 70);
    CHECK(residual_vanishes(star_commutation_residual(h, f)));
    CHECK(residual_vanishes(star_right_commutation_residual(f, h)));
  }
}

TEST_CASE_TEMPLATE("star commutation holds for parity factors on even degrees", S, GaussQ,
                   Cplx) {
  Rng rng(29);
  // Zero-form depending only on total parity, as a periodic cochain.
  const Mat2<S> even = random_matrix<S>(rng);
  const Mat2<S> odd = random_matrix<S>(rng);
  std::vector<typename Field<S>::Entry> raw;
  Site k{0, 0, 0, 0};
  for (k[0] = 0; k[0] < 2; ++k[0])
    for (k[1] = 0; k[1] < 2; ++k[1])
      for (k[2] = 0; k[2] < 2; ++k[2])
        for (k[3] = 0; k[3] < 2; ++k[3])
          raw.emplace_back(Cell{k, kEmptyMask}, total_parity(k) == 0 ? even : odd);
  const Cochain<S> h = make_periodic<S>(Field<S>::from_entries(std::move(raw)),
                                        kParityPeriods);

  for (int degree : {0, 2, 4}) {
    const Cochain<S> f = random_form<S>(rng, degree, Box{2, 2, 2, 2}, 70);
    CHECK(residual_vanishes(star_commutation_residual(h, f)));
  }
  // Right commutation on two-forms needs only the parity structure too:
  // the sampling sites differ by two lattice steps.
  const Cochain<S> f2 = random_form<S>(rng, 2, Box{2, 2, 2, 2}, 70);
  CHECK(residual_vanishes(star_right_commutation_residual(f2, h)));

  // Odd degrees genuinely fail for non-constant factors.
  const Cochain<S> f1 = make_finite<S>(
      {{Cell{Site{0, 0, 0, 0}, degree_mask(1, 1)}, mat_identity<S>()}});
  const Cochain<S> defect = star_commutation_residual(h, f1);
  CHECK(!defect.is_zero());
  CHECK(residual_vanishes(defect - star_commutation_closed_form(h, f1)));
}

TEST_CASE_TEMPLATE("star commutation closed form pins the exact defect", S, GaussQ, Cplx) {
  // Single-entry one-form against a two-site factor: the defect is the
  // difference of the factor across the dual shift, placed on the dual cell.
  const Mat2<S> ha = probe<S>(1);
  const Mat2<S> hb = probe<S>(2);
  const Mat2<S> v = probe<S>(3);
  const Site k{0, 0, 0, 0};
  const DirMask mask = degree_mask(1, 2);
  const Cochain<S> f = make_finite<S>({{Cell{k, mask}, v}});
  const Cochain<S> h = make_finite<S>(
      {{Cell{k, kEmptyMask}, ha}, {Cell{shifted(k, 2, +1), kEmptyMask}, hb}});

  const Cochain<S> expect = make_finite<S>(
      {{Cell{shifted(k, 2, +1), mask_complement(mask)}, Mat2<S>((ha - hb) * v)}});
  CHECK(star_commutation_residual(h, f) == expect);
  CHECK(star_commutation_closed_form(h, f) == expect);
}

TEST_CASE_TEMPLATE("right star commutation needs constancy along the dual step", S, GaussQ,
                   Cplx) {
  Rng rng(31);
  // A factor constant along every step of size 1_{M^c} for two-forms means
  // constant on each coset of the sublattice generated by pairs of axes;
  // total-parity factors satisfy that, single-axis-parity factors do not.
  std::vector<typename Field<S>::Entry> raw;
  Site k{0, 0, 0, 0};
  const Mat2<S> even = random_matrix<S>(rng);
  const Mat2<S> odd = random_matrix<S>(rng);
  for (k[0] = 0; k[0] < 2; ++k[0])
    for (k[1] = 0; k[1] < 2; ++k[1])
      for (k[2] = 0; k[2] < 2; ++k[2])
        for (k[3] = 0; k[3] < 2; ++k[3])
          raw.emplace_back(Cell{k, kEmptyMask}, (k[0] & 1) == 0 ? even : odd);
  const Cochain<S> axis_parity = make_periodic<S>(Field<S>::from_entries(std::move(raw)),
                                                  kParityPeriods);
  const Cochain<S> f = random_form<S>(rng, 2, Box{2, 2, 2, 2}, 80);
  CHECK(!residual_vanishes(star_right_commutation_residual(f, axis_parity)));
}
