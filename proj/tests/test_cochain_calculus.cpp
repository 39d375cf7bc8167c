#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dec4/calculus.hpp"
#include "dec4/oracle.hpp"

using namespace dec4;

namespace {

template <class S>
Mat2<S> scalar_mat(std::int64_t v) {
  return ScalarOps<S>::from_int(v) * mat_identity<S>();
}

template <class S>
Mat2<S> probe_mat(std::int64_t a, std::int64_t b) {
  Mat2<S> m;
  m(0, 0) = ScalarOps<S>::from_int(a);
  m(0, 1) = ScalarOps<S>::from_int(b);
  m(1, 0) = ScalarOps<S>::from_int(a - b);
  m(1, 1) = ScalarOps<S>::imag_unit() * ScalarOps<S>::from_int(b + 1);
  return m;
}

template <class S>
Cochain<S> sample_form(int degree, std::int64_t seed) {
  std::vector<typename Field<S>::Entry> raw;
  std::int64_t v = seed;
  for (std::int64_t x = 0; x < 2; ++x)
    for (std::int64_t y = 0; y < 2; ++y)
      for (int slot = 0; slot < kDegreeCount[degree]; ++slot) {
        raw.emplace_back(Cell{Site{x, y, x + y, 0}, degree_mask(degree, slot)},
                         probe_mat<S>(v, v + 2));
        v += 3;
      }
  return make_finite<S>(std::move(raw));
}

}  // namespace

TEST_CASE("field construction coalesces and prunes") {
  using S = GaussQ;
  const Cell c{Site{0, 0, 0, 0}, 0x1};
  auto f = Field<S>::from_entries({{c, scalar_mat<S>(2)},
                                   {c, scalar_mat<S>(-2)},
                                   {Cell{Site{1, 0, 0, 0}, 0x2}, scalar_mat<S>(5)}});
  CHECK(f.size() == 1);
  CHECK(f.find(c) == nullptr);
  CHECK(mat_equal<S>(f.value(Cell{Site{1, 0, 0, 0}, 0x2}), scalar_mat<S>(5)));
}

TEST_CASE("periodic cochains evaluate through wrapping") {
  using S = GaussQ;
  const Periods p{2, 2, 2, 2};
  auto phi = make_periodic<S>(
      {{Cell{Site{5, -2, 0, 1}, 0x0}, scalar_mat<S>(7)}}, p);
  REQUIRE(phi.periods.has_value());
  CHECK(mat_equal<S>(phi.value(Cell{Site{1, 0, 0, 1}, 0x0}), scalar_mat<S>(7)));
  CHECK(mat_equal<S>(phi.value(Cell{Site{-1, 4, 2, -3}, 0x0}), scalar_mat<S>(7)));
  CHECK(mat_is_zero<S>(phi.value(Cell{Site{0, 0, 0, 1}, 0x0})));
}

TEST_CASE("cochain sum respects parts and periods") {
  using S = GaussQ;
  const Periods p{2, 2, 2, 2};
  auto a = make_periodic<S>({{Cell{Site{0, 0, 0, 0}, 0x0}, scalar_mat<S>(1)}}, p);
  auto b = make_finite<S>({{Cell{Site{0, 0, 0, 0}, 0x0}, scalar_mat<S>(4)}});
  const auto sum = a + b;
  CHECK(mat_equal<S>(sum.value(Cell{Site{0, 0, 0, 0}, 0x0}), scalar_mat<S>(5)));
  CHECK(mat_equal<S>(sum.value(Cell{Site{2, 0, 0, 0}, 0x0}), scalar_mat<S>(1)));
  const auto cancel = a - a;
  CHECK(cancel.is_zero());
  CHECK(!cancel.periods.has_value());
  const Periods q{4, 2, 2, 2};
  auto c = make_periodic<S>({{Cell{Site{0, 0, 0, 0}, 0x0}, scalar_mat<S>(1)}}, q);
  CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE_TEMPLATE("coboundary squares to zero", S, GaussQ, Cplx) {
  for (int degree = 0; degree <= 2; ++degree) {
    const auto phi = sample_form<S>(degree, 2 + degree);
    CHECK(residual_vanishes(coboundary(coboundary(phi)), 1e-12));
  }
  const Periods p{2, 2, 2, 2};
  const auto per = make_periodic<S>(
      {{Cell{Site{0, 1, 0, 1}, 0x1}, probe_mat<S>(3, 1)},
       {Cell{Site{1, 1, 0, 0}, 0x2}, probe_mat<S>(-2, 5)}},
      p);
  CHECK(residual_vanishes(coboundary(coboundary(per)), 1e-12));
}

TEST_CASE("coboundary of a vertex function is the forward difference") {
  using S = GaussQ;
  const auto h = make_finite<S>({{Cell{Site{0, 0, 0, 0}, 0x0}, scalar_mat<S>(3)}});
  const auto dh = coboundary(h);
  // The vertex at the origin feeds each incident edge: negatively as the
  // near end, positively as the far end of the edge one step back.
  for (int axis = 0; axis < kAxes; ++axis) {
    const DirMask m = mask_with(0, axis);
    CHECK(mat_equal<S>(dh.value(Cell{Site{0, 0, 0, 0}, m}), scalar_mat<S>(-3)));
    CHECK(mat_equal<S>(dh.value(Cell{shifted(Site{0, 0, 0, 0}, axis, -1), m}),
                       scalar_mat<S>(3)));
  }
  CHECK(dh.fin.size() == 8);
}

TEST_CASE("cup of crossing edge pairs carries the interleaving sign") {
  using S = GaussQ;
  const Site o{0, 0, 0, 0};
  // Edge along axis 0 cupped with the far vertex-edge factor along axis 1.
  const auto a1 = make_finite<S>({{Cell{o, 0x1}, scalar_mat<S>(1)}});
  const auto b1 = make_finite<S>({{Cell{Site{1, 0, 0, 0}, 0x2}, scalar_mat<S>(1)}});
  const auto c1 = cup(a1, b1);
  CHECK(mat_equal<S>(c1.value(Cell{o, 0x3}), scalar_mat<S>(1)));
  CHECK(c1.fin.size() == 1);
  // Edge along axis 1 cupped with the far edge along axis 0: one swap.
  const auto a2 = make_finite<S>({{Cell{o, 0x2}, scalar_mat<S>(1)}});
  const auto b2 = make_finite<S>({{Cell{Site{0, 1, 0, 0}, 0x1}, scalar_mat<S>(1)}});
  const auto c2 = cup(a2, b2);
  CHECK(mat_equal<S>(c2.value(Cell{o, 0x3}), scalar_mat<S>(-1)));
  CHECK(c2.fin.size() == 1);
}

TEST_CASE("cup against a vertex function multiplies pointwise") {
  using S = GaussQ;
  const Site o{0, 0, 0, 0};
  const auto f = make_finite<S>({{Cell{o, 0x6}, probe_mat<S>(2, 3)}});
  const auto h_near = make_finite<S>({{Cell{o, 0x0}, probe_mat<S>(1, 4)}});
  const auto left = cup(h_near, f);
  CHECK(mat_equal<S>(left.value(Cell{o, 0x6}),
                     Mat2<S>(probe_mat<S>(1, 4) * probe_mat<S>(2, 3))));
  // On the right the vertex factor is sampled at the far corner of the mask.
  const auto h_far = make_finite<S>({{Cell{Site{0, 1, 1, 0}, 0x0}, probe_mat<S>(1, 4)}});
  const auto right = cup(f, h_far);
  CHECK(mat_equal<S>(right.value(Cell{o, 0x6}),
                     Mat2<S>(probe_mat<S>(2, 3) * probe_mat<S>(1, 4))));
  CHECK(cup(f, h_near).is_zero());
}

TEST_CASE("cup is associative") {
  using S = GaussQ;
  const auto a = sample_form<S>(1, 1);
  const auto b = sample_form<S>(1, 4);
  const auto c = sample_form<S>(2, 7);
  CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
}

TEST_CASE_TEMPLATE("leibniz residual vanishes", S, GaussQ, Cplx) {
  const auto f0 = sample_form<S>(0, 5);
  const auto f1 = sample_form<S>(1, 2);
  const auto f2 = sample_form<S>(2, 3);
  CHECK(residual_vanishes(leibniz_residual(f0, f1), 1e-11));
  CHECK(residual_vanishes(leibniz_residual(f1, f1), 1e-11));
  CHECK(residual_vanishes(leibniz_residual(f1, f2), 1e-11));
  CHECK(residual_vanishes(leibniz_residual(f2, f1), 1e-11));
}

TEST_CASE("periodic and finite parts interact in cup") {
  using S = GaussQ;
  const Periods p{2, 2, 2, 2};
  // Parity-dependent vertex pattern times a finite edge form, both orders.
  const auto h = make_periodic<S>({{Cell{Site{0, 0, 0, 0}, 0x0}, probe_mat<S>(1, 2)},
                                   {Cell{Site{1, 0, 0, 0}, 0x0}, probe_mat<S>(4, 1)}},
                                  p);
  const auto f = make_finite<S>({{Cell{Site{2, 0, 0, 0}, 0x1}, probe_mat<S>(3, 3)}});
  const auto hf = cup(h, f);
  REQUIRE(hf.fin.size() == 1);
  CHECK(!hf.periods.has_value());
  // h is sampled at the base site (2,0,0,0), an even-parity site on axis 0.
  CHECK(mat_equal<S>(hf.value(Cell{Site{2, 0, 0, 0}, 0x1}),
                     Mat2<S>(probe_mat<S>(1, 2) * probe_mat<S>(3, 3))));
  const auto fh = cup(f, h);
  REQUIRE(fh.fin.size() == 1);
  // On the right h is sampled at the far end (3,0,0,0), an odd site.
  CHECK(mat_equal<S>(fh.value(Cell{Site{2, 0, 0, 0}, 0x1}),
                     Mat2<S>(probe_mat<S>(3, 3) * probe_mat<S>(4, 1))));
  // Purely periodic cup keeps periodicity.
  const auto hh = cup(h, h);
  CHECK(hh.periods.has_value());
  CHECK(mat_equal<S>(hh.value(Cell{Site{0, 0, 0, 0}, 0x0}),
                     Mat2<S>(probe_mat<S>(1, 2) * probe_mat<S>(1, 2))));
}

TEST_CASE_TEMPLATE("fast operators match the reference implementations", S, GaussQ, Cplx) {
  const auto f1 = sample_form<S>(1, 2);
  const auto f2 = sample_form<S>(2, 9);
  CHECK(cochains_match(coboundary(f1), oracle_coboundary(f1), 1e-12));
  CHECK(cochains_match(coboundary(f2), oracle_coboundary(f2), 1e-12));
  CHECK(cochains_match(cup(f1, f2), oracle_cup(f1, f2), 1e-12));
  CHECK(cochains_match(cup(f1, f1), oracle_cup(f1, f1), 1e-12));

  const Periods p{2, 2, 2, 2};
  const auto per = make_periodic<S>(
      {{Cell{Site{0, 1, 1, 0}, 0x3}, probe_mat<S>(2, -1)},
       {Cell{Site{1, 0, 0, 1}, 0x5}, probe_mat<S>(0, 3)}},
      p);
  CHECK(cochains_match(coboundary(per), oracle_coboundary(per), 1e-12));
  CHECK(cochains_match(cup(f1, per), oracle_cup(f1, per), 1e-12));
  CHECK(cochains_match(cup(per, f1), oracle_cup(per, f1), 1e-12));
  CHECK(cochains_match(cup(per, per), oracle_cup(per, per), 1e-12));
}

TEST_CASE("pairing evaluates chains against cochains") {
  using S = GaussQ;
  const auto f = sample_form<S>(1, 3);
  const Cell c{Site{0, 1, 1, 0}, 0x2};
  const Chain probe = cell_chain(c, 2) - cell_chain(Cell{Site{9, 9, 9, 9}, 0x2}, 5);
  CHECK(mat_equal<S>(pair_chain(probe, f), Mat2<S>(ScalarOps<S>::from_int(2) * f.value(c))));
}

TEST_CASE("degree helpers") {
  using S = GaussQ;
  const auto f = sample_form<S>(2, 1);
  CHECK(is_homogeneous(f, 2));
  CHECK(!is_homogeneous(f, 1));
  CHECK(homogeneous_degree(f) == 2);
  const auto mixed = f + sample_form<S>(1, 1);
  CHECK_THROWS_AS(homogeneous_degree(mixed), std::invalid_argument);
  CHECK(homogeneous_degree(Cochain<S>{}, 3) == 3);
}
