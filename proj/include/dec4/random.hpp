#pragma once

// Deterministic random generators for tests and verification suites. The
// engine is mt19937_64 (bit-exact across platforms) and all derived draws
// use explicit arithmetic on its output, never distribution classes with
// implementation-defined streams. Exact-mode draws favor integer values
// (denominator 1) with a configurable share of small denominators, keeping
// identity runs fast while still exercising rational arithmetic; float-mode
// draws use dyadic values so that low-degree identities stay exact in
// double precision as well.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dec4/cochain.hpp"
#include "dec4/gauge.hpp"
#include "dec4/selfdual.hpp"

namespace dec4 {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [lo, hi] (modulo bias is irrelevant for test draws).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// True with probability percent/100.
  bool chance(int percent) { return uniform(0, 99) < percent; }

 private:
  std::mt19937_64 eng_;
};

template <class S>
S random_scalar(Rng& rng, bool allow_fractions = true) {
  const std::int64_t a = rng.uniform(-3, 3);
  const std::int64_t b = rng.uniform(-3, 3);
  if constexpr (ScalarOps<S>::exact) {
    const std::int64_t den = (allow_fractions && rng.chance(25)) ? rng.uniform(2, 3) : 1;
    return GaussQ(Rat64(a, den), Rat64(b, den));
  } else {
    const double den = (allow_fractions && rng.chance(25)) ? 2.0 : 1.0;
    return Cplx(static_cast<double>(a) / den, static_cast<double>(b) / den);
  }
}

template <class S>
Mat2<S> random_matrix(Rng& rng, bool allow_fractions = true) {
  Mat2<S> m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = random_scalar<S>(rng, allow_fractions);
  return m;
}

template <class S>
Mat2<S> random_invertible(Rng& rng) {
  for (;;) {
    const Mat2<S> m = random_matrix<S>(rng);
    const S det = m.determinant();
    if (ScalarOps<S>::exact ? !ScalarOps<S>::is_zero(det)
                            : ScalarOps<S>::magnitude(det) > 0.25)
      return m;
  }
}

/// Anti-hermitian traceless value: real rational combination of the lie
/// basis.
template <class S>
Mat2<S> random_algebra(Rng& rng) {
  Mat2<S> m = mat_zero<S>();
  for (int alpha = 0; alpha < 3; ++alpha)
    m += ScalarOps<S>::from_int(rng.uniform(-2, 2)) * lie_basis<S>(alpha);
  return m;
}

/// Traceless complex value (the complexified algebra).
template <class S>
Mat2<S> random_traceless(Rng& rng) {
  Mat2<S> m = mat_zero<S>();
  for (int alpha = 0; alpha < 3; ++alpha)
    m += random_scalar<S>(rng, false) * lie_basis<S>(alpha);
  return m;
}

namespace detail {

/// Integer quaternions (a,b,c,d;r) with a^2+b^2+c^2+d^2 = r^2: these give
/// special unitary matrices with exact rational entries.
inline constexpr std::array<std::array<std::int64_t, 5>, 8> kUnitQuadruples = {{
    {{1, 0, 0, 0, 1}},
    {{1, 2, 2, 0, 3}},
    {{0, 3, 4, 0, 5}},
    {{1, 2, 2, 4, 5}},
    {{2, 3, 6, 0, 7}},
    {{2, 4, 5, 2, 7}},
    {{1, 4, 8, 0, 9}},
    {{2, 6, 9, 0, 11}},
}};

}  // namespace detail

template <class S>
Mat2<S> random_special_unitary(Rng& rng) {
  if constexpr (ScalarOps<S>::exact) {
    // Product of two table entries with randomly permuted, randomly signed
    // imaginary components.
    Mat2<S> out = mat_identity<S>();
    for (int pick = 0; pick < 2; ++pick) {
      auto q = detail::kUnitQuadruples[static_cast<std::size_t>(rng.uniform(
          0, static_cast<std::int64_t>(detail::kUnitQuadruples.size()) - 1))];
      for (int i = 1; i < 4; ++i) {
        const int j = static_cast<int>(rng.uniform(i, 3));
        std::swap(q[i], q[j]);
        if (rng.chance(50)) q[i] = -q[i];
      }
      out = out * su2_from_quaternion<S>(q[0], q[1], q[2], q[3], q[4]);
    }
    return out;
  } else {
    double q[4];
    double norm2 = 0.0;
    for (double& v : q) {
      v = static_cast<double>(rng.uniform(-1000, 1000)) + 0.5;
      norm2 += v * v;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    Mat2<S> m;
    m(0, 0) = Cplx(q[0] * inv, q[1] * inv);
    m(0, 1) = Cplx(q[2] * inv, q[3] * inv);
    m(1, 0) = Cplx(-q[2] * inv, q[3] * inv);
    m(1, 1) = Cplx(q[0] * inv, -q[1] * inv);
    return m;
  }
}

enum class ValueClass { generic, algebra, traceless, special_unitary, invertible };

template <class S>
Mat2<S> random_value(Rng& rng, ValueClass c, bool allow_fractions = true) {
  switch (c) {
    case ValueClass::generic: return random_matrix<S>(rng, allow_fractions);
    case ValueClass::algebra: return random_algebra<S>(rng);
    case ValueClass::traceless: return random_traceless<S>(rng);
    case ValueClass::special_unitary: return random_special_unitary<S>(rng);
    case ValueClass::invertible: return random_invertible<S>(rng);
  }
  throw std::logic_error("dec4: unknown value class");
}

/// Form with entries on box sites: every (site, mask) cell is filled with
/// probability fill_percent (100 = dense).
template <class S>
Cochain<S> random_form(Rng& rng, int degree, const Box& box, int fill_percent = 60,
                       ValueClass values = ValueClass::generic,
                       bool allow_fractions = true) {
  std::vector<typename Field<S>::Entry> raw;
  box.for_each_site([&](const Site& k) {
    for (int slot = 0; slot < kDegreeCount[degree]; ++slot) {
      if (fill_percent < 100 && !rng.chance(fill_percent)) continue;
      raw.emplace_back(Cell{k, degree_mask(degree, slot)},
                       random_value<S>(rng, values, allow_fractions));
    }
  });
  return make_finite<S>(std::move(raw));
}

/// Periodic form given by one random fundamental domain.
template <class S>
Cochain<S> random_periodic_form(Rng& rng, int degree, const Periods& periods,
                                int fill_percent = 60,
                                ValueClass values = ValueClass::generic) {
  check_periods(periods);
  std::vector<typename Field<S>::Entry> raw;
  Site k{0, 0, 0, 0};
  for (k[0] = 0; k[0] < periods[0]; ++k[0])
    for (k[1] = 0; k[1] < periods[1]; ++k[1])
      for (k[2] = 0; k[2] < periods[2]; ++k[2])
        for (k[3] = 0; k[3] < periods[3]; ++k[3])
          for (int slot = 0; slot < kDegreeCount[degree]; ++slot) {
            if (fill_percent < 100 && !rng.chance(fill_percent)) continue;
            raw.emplace_back(Cell{k, degree_mask(degree, slot)},
                             random_value<S>(rng, values));
          }
  return make_periodic<S>(Field<S>::from_entries(std::move(raw)), periods);
}

/// Arbitrary invertible gauge: identity background with random invertible
/// overrides on the box sites and a halo around them, so that every site a
/// box-supported form can reach carries a generic value.
template <class S>
GaugeField<S> random_gauge(Rng& rng, const Box& box, ValueClass values = ValueClass::invertible) {
  GaugeField<S> g;
  const Box halo{box.n[0] + 2, box.n[1] + 2, box.n[2] + 2, box.n[3] + 2};
  halo.for_each_site([&](const Site& k) {
    const Site at{k[0] - 1, k[1] - 1, k[2] - 1, k[3] - 1};
    g = g.with_override(at, random_value<S>(rng, values));
  });
  return g;
}

/// Double-shift invariant gauge: one invertible value per total parity.
template <class S>
GaugeField<S> random_parity_gauge(Rng& rng, ValueClass values = ValueClass::invertible) {
  return GaugeField<S>::parity(random_value<S>(rng, values), random_value<S>(rng, values));
}

/// Gauge violating double-shift invariance: a full 16-class pattern redrawn
/// until at least one class differs within a parity orbit.
template <class S>
GaugeField<S> random_nonparity_gauge(Rng& rng, ValueClass values = ValueClass::invertible) {
  for (;;) {
    std::array<Mat2<S>, GaugeField<S>::kClasses> classes;
    for (auto& m : classes) m = random_value<S>(rng, values);
    GaugeField<S> g = GaugeField<S>::pattern(classes);
    if (!g.double_shift_invariant()) return g;
  }
}

/// Exact solution of the operator equation star(F) = cF on a torus with the
/// given (even-extent) periods: the three components whose mask misses the
/// time axis are free up to the diagonal-shift relation implied by the
/// equation, and the three time-carrying components are derived from them.
template <class S>
Cochain<S> random_duality_solution(Rng& rng, DualityMode mode,
                                   const Periods& periods = kParityPeriods) {
  check_periods(periods);
  for (int a = 0; a < kAxes; ++a)
    if (periods[a] % 2 != 0)
      throw std::invalid_argument("dec4: duality solutions need even extents");

  const S c = duality_factor<S>(mode);
  const int s = consequence_relation_sign(mode);
  const ValueClass values =
      (s > 0) ? ValueClass::traceless : ValueClass::algebra;

  // Free components: slots 3,4,5 (masks without axis 0), subject to
  // F_{k+diag} = s F_k along the wrapped main diagonal.
  Field<S> free_part;
  {
    std::vector<typename Field<S>::Entry> raw;
    Site k{0, 0, 0, 0};
    for (k[0] = 0; k[0] < periods[0]; ++k[0])
      for (k[1] = 0; k[1] < periods[1]; ++k[1])
        for (k[2] = 0; k[2] < periods[2]; ++k[2])
          for (k[3] = 0; k[3] < periods[3]; ++k[3]) {
            const Site partner = wrap_site(shifted_all(k, +1), periods);
            if (partner < k) continue;  // one draw per diagonal orbit
            for (int slot = 3; slot < 6; ++slot) {
              const Mat2<S> v = random_value<S>(rng, values);
              raw.emplace_back(Cell{k, degree_mask(2, slot)}, v);
              if (partner != k)
                raw.emplace_back(Cell{partner, degree_mask(2, slot)},
                                 Mat2<S>(ScalarOps<S>::from_int(s) * v));
            }
          }
    free_part = Field<S>::from_entries(std::move(raw));
  }

  // Derived components, from the componentwise equations pairing each
  // time-carrying slot with its complement: slot0_k = -c slot5_{k+e0+e1},
  // slot1_k = c slot4_{k+e0+e2}, slot2_k = -c slot3_{k+e0+e3}.
  std::vector<typename Field<S>::Entry> raw;
  const auto at = [&](const Site& k, int slot) {
    return free_part.value(Cell{wrap_site(k, periods), degree_mask(2, slot)});
  };
  Site k{0, 0, 0, 0};
  for (k[0] = 0; k[0] < periods[0]; ++k[0])
    for (k[1] = 0; k[1] < periods[1]; ++k[1])
      for (k[2] = 0; k[2] < periods[2]; ++k[2])
        for (k[3] = 0; k[3] < periods[3]; ++k[3]) {
          for (int slot = 3; slot < 6; ++slot)
            raw.emplace_back(Cell{k, degree_mask(2, slot)}, at(k, slot));
          const Site d01 = shifted(shifted(k, 0, +1), 1, +1);
          const Site d02 = shifted(shifted(k, 0, +1), 2, +1);
          const Site d03 = shifted(shifted(k, 0, +1), 3, +1);
          raw.emplace_back(Cell{k, degree_mask(2, 0)}, Mat2<S>(-(c * at(d01, 5))));
          raw.emplace_back(Cell{k, degree_mask(2, 1)}, Mat2<S>(c * at(d02, 4)));
          raw.emplace_back(Cell{k, degree_mask(2, 2)}, Mat2<S>(-(c * at(d03, 3))));
        }
  return make_periodic<S>(Field<S>::from_entries(std::move(raw)), periods);
}

}  // namespace dec4
