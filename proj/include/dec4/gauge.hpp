#pragma once

// Gauge transformations and the connection calculus. A gauge field assigns
// an invertible matrix to every lattice site: a 2-periodic parity pattern
// (16 classes) plus finitely many per-site overrides. That shape makes the
// pointwise-infinite gauges of interest (constant, parity, double-shift
// invariant) exactly representable, while staying closed under pointwise
// composition and inverse. As a cochain, the pattern becomes the periodic
// part and the overrides the finite part, so every gauge formula below runs
// through the ordinary cup and coboundary operators.

#include <array>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dec4/calculus.hpp"
#include "dec4/hodge.hpp"

namespace dec4 {

inline int parity_index(const Site& k) {
  int idx = 0;
  for (int a = 0; a < kAxes; ++a) idx |= static_cast<int>(k[a] & 1) << a;
  return idx;
}

inline int total_parity(const Site& k) {
  return static_cast<int>((k[0] + k[1] + k[2] + k[3]) & 1);
}

template <class S>
class GaugeField {
 public:
  static constexpr int kClasses = 16;

  /// Identity everywhere.
  GaugeField() { pattern_.fill(mat_identity<S>()); }

  static GaugeField constant(const Mat2<S>& m) {
    GaugeField g;
    g.pattern_.fill(m);
    return g;
  }

  /// Value depends only on the parity of k_0 + k_1 + k_2 + k_3; this is the
  /// general double-shift invariant gauge.
  static GaugeField parity(const Mat2<S>& even, const Mat2<S>& odd) {
    GaugeField g;
    for (int idx = 0; idx < kClasses; ++idx)
      g.pattern_[idx] = (std::popcount(static_cast<unsigned>(idx)) % 2 == 0) ? even : odd;
    return g;
  }

  /// One matrix per coordinate-parity class, indexed by bit a = k_a & 1.
  static GaugeField pattern(std::array<Mat2<S>, kClasses> classes) {
    GaugeField g;
    g.pattern_ = std::move(classes);
    return g;
  }

  GaugeField with_override(const Site& k, const Mat2<S>& m) const {
    GaugeField g = *this;
    for (auto& [site, value] : g.overrides_)
      if (site == k) {
        value = m;
        return g;
      }
    g.overrides_.emplace_back(k, m);
    return g;
  }

  const Mat2<S>& value(const Site& k) const {
    for (const auto& [site, m] : overrides_)
      if (site == k) return m;
    return pattern_[parity_index(k)];
  }

  const std::array<Mat2<S>, kClasses>& classes() const { return pattern_; }
  const std::vector<std::pair<Site, Mat2<S>>>& overrides() const { return overrides_; }

  friend GaugeField compose(const GaugeField& g, const GaugeField& h) {
    GaugeField out;
    for (int idx = 0; idx < kClasses; ++idx)
      out.pattern_[idx] = g.pattern_[idx] * h.pattern_[idx];
    std::set<Site> sites;
    for (const auto& [site, m] : g.overrides_) sites.insert(site);
    for (const auto& [site, m] : h.overrides_) sites.insert(site);
    for (const Site& site : sites)
      out.overrides_.emplace_back(site, Mat2<S>(g.value(site) * h.value(site)));
    return out;
  }

  GaugeField inverse() const {
    GaugeField out;
    for (int idx = 0; idx < kClasses; ++idx)
      out.pattern_[idx] = inverse_checked<S>(pattern_[idx]);
    for (const auto& [site, m] : overrides_)
      out.overrides_.emplace_back(site, inverse_checked<S>(m));
    return out;
  }

  /// Invariance under every double shift k -> k + e_i + e_j: the value may
  /// depend only on the total parity of the site, with no overrides that
  /// deviate from their class.
  bool double_shift_invariant() const {
    for (int idx = 0; idx < kClasses; ++idx) {
      const int ref = (std::popcount(static_cast<unsigned>(idx)) % 2 == 0) ? 0 : 1;
      if (!mat_equal<S>(pattern_[idx], pattern_[ref])) return false;
    }
    for (const auto& [site, m] : overrides_)
      if (!mat_equal<S>(m, pattern_[parity_index(site)])) return false;
    return true;
  }

  /// The gauge as a 0-cochain: parity pattern as the 2-periodic part,
  /// overrides as finite corrections on top of it.
  Cochain<S> as_cochain() const {
    std::vector<typename Field<S>::Entry> per_raw;
    per_raw.reserve(kClasses);
    for (int idx = 0; idx < kClasses; ++idx) {
      Site k{0, 0, 0, 0};
      for (int a = 0; a < kAxes; ++a) k[a] = (idx >> a) & 1;
      per_raw.emplace_back(Cell{k, kEmptyMask}, pattern_[idx]);
    }
    std::vector<typename Field<S>::Entry> fin_raw;
    fin_raw.reserve(overrides_.size());
    for (const auto& [site, m] : overrides_)
      fin_raw.emplace_back(Cell{site, kEmptyMask},
                           Mat2<S>(m - pattern_[parity_index(site)]));
    return detail::settle<S>(Field<S>::from_entries(std::move(fin_raw)),
                             Field<S>::from_entries(std::move(per_raw)),
                             kParityPeriods);
  }

 private:
  std::array<Mat2<S>, kClasses> pattern_;
  std::vector<std::pair<Site, Mat2<S>>> overrides_;
};

/// Conjugation of any cochain: h cup w cup h^{-1}.
template <class S>
Cochain<S> conjugate(const GaugeField<S>& h, const Cochain<S>& w) {
  return cup(h.as_cochain(), cup(w, h.inverse().as_cochain()));
}

/// Gauge transform of a connection 1-form:
/// A' = h cup d(h^{-1}) + h cup A cup h^{-1}.
template <class S>
Cochain<S> gauge_transform(const GaugeField<S>& h, const Cochain<S>& a) {
  const Cochain<S> hc = h.as_cochain();
  const Cochain<S> hinv = h.inverse().as_cochain();
  return cup(hc, coboundary(hinv)) + cup(hc, cup(a, hinv));
}

/// The inhomogeneous terms of two mutually inverse gauges cancel:
/// d(h) cup h^{-1} + h cup d(h^{-1}) = 0 for every invertible h.
template <class S>
Cochain<S> gauge_cancellation_residual(const GaugeField<S>& h) {
  const Cochain<S> hc = h.as_cochain();
  const Cochain<S> hinv = h.inverse().as_cochain();
  return cup(coboundary(hc), hinv) + cup(hc, coboundary(hinv));
}

/// Curvature of a connection 1-form: F = dA + A cup A.
template <class S>
Cochain<S> curvature(const Cochain<S>& a) {
  return coboundary(a) + cup(a, a);
}

namespace detail {

/// Curvature of one plaquette (axes i < r at site k) from sampled values of
/// the connection components: forward differences plus the ordered products
/// around the near corner.
template <class S, class At>
Mat2<S> plaquette_curvature(const Site& k, int i, int r, At&& a_at) {
  const Site ti = shifted(k, i, +1);
  const Site tr = shifted(k, r, +1);
  Mat2<S> f = a_at(ti, r) - a_at(k, r);
  f -= a_at(tr, i) - a_at(k, i);
  f += a_at(k, i) * a_at(ti, r);
  f -= a_at(k, r) * a_at(tr, i);
  return f;
}

}  // namespace detail

/// Independent expression of the curvature, written directly in components
/// instead of through the coboundary and cup kernels. Accepts a purely
/// finite or a purely periodic connection.
template <class S>
Cochain<S> curvature_by_components(const Cochain<S>& a) {
  if (!a.fin.empty() && a.periods)
    throw std::invalid_argument(
        "dec4: component curvature needs a purely finite or purely periodic input");

  std::vector<typename Field<S>::Entry> raw;
  const auto emit_site = [&](const Site& k, auto&& a_at) {
    for (int i = 0; i < kAxes; ++i)
      for (int r = i + 1; r < kAxes; ++r) {
        const Mat2<S> f = detail::plaquette_curvature<S>(k, i, r, a_at);
        if (!mat_is_zero<S>(f))
          raw.emplace_back(Cell{k, static_cast<DirMask>(mask_with(mask_with(0, i), r))}, f);
      }
  };

  if (!a.periods) {
    const auto a_at = [&](const Site& k, int axis) {
      return a.fin.value(Cell{k, mask_with(0, axis)});
    };
    std::set<Site> sites;
    for (const auto& [cell, v] : a.fin.entries()) {
      sites.insert(cell.k);
      for (int axis = 0; axis < kAxes; ++axis) sites.insert(shifted(cell.k, axis, -1));
    }
    for (const Site& k : sites) emit_site(k, a_at);
    return make_finite<S>(Field<S>::from_entries(std::move(raw)));
  }

  const Periods periods = *a.periods;
  const auto a_at = [&](const Site& k, int axis) {
    return a.per.value(Cell{wrap_site(k, periods), mask_with(0, axis)});
  };
  Site k{0, 0, 0, 0};
  for (k[0] = 0; k[0] < periods[0]; ++k[0])
    for (k[1] = 0; k[1] < periods[1]; ++k[1])
      for (k[2] = 0; k[2] < periods[2]; ++k[2])
        for (k[3] = 0; k[3] < periods[3]; ++k[3]) emit_site(k, a_at);
  return make_periodic<S>(Field<S>::from_entries(std::move(raw)), periods);
}

/// Covariant differential on a form of degree r:
/// d_A w = dw + A cup w + (-1)^{r+1} w cup A.
template <class S>
Cochain<S> covariant_differential(const Cochain<S>& a, const Cochain<S>& w) {
  const int r = homogeneous_degree(w);
  Cochain<S> out = coboundary(w) + cup(a, w);
  const Cochain<S> wa = cup(w, a);
  return (r % 2 == 0) ? out - wa : out + wa;
}

/// d_A F for F the curvature of A; identically zero for every connection.
template <class S>
Cochain<S> bianchi_residual(const Cochain<S>& a) {
  const Cochain<S> f = curvature(a);
  return coboundary(f) + cup(a, f) - cup(f, a);
}

/// The two conventions for transporting the connection past the dual field
/// strength in the field equation: conjugated uses star(F) cup A, doubled
/// uses star(F) cup star(star(A)).
enum class DualVariant { conjugated, double_starred };

/// Field-equation residual for an arbitrary 2-form G in place of the
/// curvature: d(star G) + A cup star G - star G cup T(A), with T as selected
/// by the variant.
template <class S>
Cochain<S> dual_field_residual(const Cochain<S>& a, const Cochain<S>& g, DualVariant v) {
  const Cochain<S> sg = star(g);
  Cochain<S> out = coboundary(sg) + cup(a, sg);
  switch (v) {
    case DualVariant::conjugated:
      return out - cup(sg, a);
    case DualVariant::double_starred:
      return out - cup(sg, double_star(a));
  }
  throw std::logic_error("dec4: unknown dual variant");
}

/// Yang-Mills residual of a connection: the dual-field residual evaluated on
/// its own curvature.
template <class S>
Cochain<S> ym_residual(const Cochain<S>& a, DualVariant v) {
  return dual_field_residual(a, curvature(a), v);
}

/// Gauge-covariance defect of the Yang-Mills residual:
/// residual(A') - h cup residual(A) cup h^{-1} with A' the transform of A.
/// Vanishes exactly for double-shift invariant gauges.
template <class S>
Cochain<S> ym_covariance_residual(const Cochain<S>& a, const GaugeField<S>& h,
                                  DualVariant v = DualVariant::conjugated) {
  return ym_residual(gauge_transform(h, a), v) - conjugate(h, ym_residual(a, v));
}

/// The combination g^{-1} cup d(g) + g^{-1} cup A cup g, invariant under
/// simultaneous replacement (A, g) -> (gauge_transform(h, A), h compose g).
template <class S>
Cochain<S> dressed_connection(const Cochain<S>& a, const GaugeField<S>& g) {
  const Cochain<S> gc = g.as_cochain();
  const Cochain<S> ginv = g.inverse().as_cochain();
  return cup(ginv, coboundary(gc)) + cup(ginv, cup(a, gc));
}

}  // namespace dec4
