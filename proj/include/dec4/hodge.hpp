#pragma once

// Lorentz Hodge star. Each basis cell maps to the complementary-mask cell at
// the far corner, with a sign split into a cup-ordering factor and a
// signature factor that flips exactly the masks containing the time axis
// (axis 0). The star is a bijection on basis cells, so the inverse is the
// reversed relabeling, not a fourth power.

#include <utility>
#include <vector>

#include "dec4/calculus.hpp"

namespace dec4 {

/// Signature factor: -1 when the mask contains the time axis.
inline int time_signature(DirMask m) { return mask_has(m, 0) ? -1 : 1; }

/// Sign epsilon(M) with star(k, M) = epsilon(M) * (k + 1_M, M^c).
inline int star_sign(DirMask m) {
  const int cup = cup_sign_negative(m, mask_complement(m)) ? -1 : 1;
  return time_signature(m) * cup;
}

/// Sign of the double star on a degree-|M| cell; the site shift is tau (all
/// axes +1) regardless of mask.
inline int double_star_sign(DirMask m) {
  return star_sign(m) * star_sign(mask_complement(m));
}

namespace detail {

template <class S>
void append_star(const Cell& c, const Mat2<S>& a,
                 std::vector<typename Field<S>::Entry>& out, const Periods* wrap) {
  Site far = shifted_mask(c.k, c.mask, +1);
  if (wrap) far = wrap_site(far, *wrap);
  const Mat2<S> sa = star_sign(c.mask) < 0 ? Mat2<S>(-a) : a;
  out.emplace_back(Cell{far, mask_complement(c.mask)}, sa);
}

template <class S>
void append_star_inverse(const Cell& c, const Mat2<S>& a,
                         std::vector<typename Field<S>::Entry>& out, const Periods* wrap) {
  const DirMask pre = mask_complement(c.mask);
  Site base = shifted_mask(c.k, pre, -1);
  if (wrap) base = wrap_site(base, *wrap);
  const Mat2<S> sa = star_sign(pre) < 0 ? Mat2<S>(-a) : a;
  out.emplace_back(Cell{base, pre}, sa);
}

template <class S, class Kernel>
Cochain<S> map_cells(const Cochain<S>& phi, Kernel&& kernel) {
  std::vector<typename Field<S>::Entry> fin_raw;
  fin_raw.reserve(phi.fin.size());
  for (const auto& [cell, a] : phi.fin.entries()) kernel(cell, a, fin_raw, nullptr);
  std::vector<typename Field<S>::Entry> per_raw;
  if (phi.periods) {
    per_raw.reserve(phi.per.size());
    for (const auto& [cell, a] : phi.per.entries())
      kernel(cell, a, per_raw, &*phi.periods);
  }
  return detail::settle<S>(Field<S>::from_entries(std::move(fin_raw)),
                           Field<S>::from_entries(std::move(per_raw)), phi.periods);
}

}  // namespace detail

template <class S>
Cochain<S> star(const Cochain<S>& phi) {
  return detail::map_cells(phi, [](const Cell& c, const Mat2<S>& a, auto& out,
                                   const Periods* wrap) {
    detail::append_star<S>(c, a, out, wrap);
  });
}

template <class S>
Cochain<S> star_inverse(const Cochain<S>& phi) {
  return detail::map_cells(phi, [](const Cell& c, const Mat2<S>& a, auto& out,
                                   const Periods* wrap) {
    detail::append_star_inverse<S>(c, a, out, wrap);
  });
}

template <class S>
Cochain<S> double_star(const Cochain<S>& phi) {
  return star(star(phi));
}

/// Residual of commuting a 0-form factor through the star:
/// star(h cup f) - h cup star(f). Zero whenever h is constant on each pair
/// {k, k + 1_M} over the support of f (in particular for 0- and 4-forms,
/// and for parity-periodic h on even-degree forms); nonzero in general for
/// odd degrees. See star_commutation_closed_form for the exact defect.
template <class S>
Cochain<S> star_commutation_residual(const Cochain<S>& h, const Cochain<S>& f) {
  return star(cup(h, f)) - cup(h, star(f));
}

/// Mirror residual for a 0-form factor on the right:
/// star(f cup h) - star(f) cup h. The defect at an f-entry (k, M, v) is
/// epsilon(M) * v * (h_{k+1_M} - h_{k+1}), so it vanishes exactly when h is
/// constant along the complementary diagonal step (one unit in each axis
/// outside M). For 2-forms that step is a double shift, which is why
/// double-shift-invariant gauges commute with the star on curvature forms.
template <class S>
Cochain<S> star_right_commutation_residual(const Cochain<S>& f, const Cochain<S>& h) {
  return star(cup(f, h)) - cup(star(f), h);
}

/// Closed form of the left-factor residual, derived independently of the
/// operator composition: for each f-entry (k, M, v) the defect is
/// epsilon(M) * (h_k - h_{k+1_M}) * v placed at (k + 1_M, M^c).
/// Supports finite f under arbitrary h; a periodic f part requires h to be
/// pure-periodic with the same periods (the only shape the suites need).
template <class S>
Cochain<S> star_commutation_closed_form(const Cochain<S>& h, const Cochain<S>& f) {
  const auto periods = detail::joint_periods(h, f);

  const auto h_at = [&](const Site& k) { return h.value(Cell{k, 0}); };

  std::vector<typename Field<S>::Entry> fin_raw;
  for (const auto& [cell, v] : f.fin.entries()) {
    const Site far = shifted_mask(cell.k, cell.mask, +1);
    Mat2<S> defect = (h_at(cell.k) - h_at(far)) * v;
    if (star_sign(cell.mask) < 0) defect = -defect;
    fin_raw.emplace_back(Cell{far, mask_complement(cell.mask)}, defect);
  }

  std::vector<typename Field<S>::Entry> per_raw;
  if (f.periods) {
    if (!h.fin.empty())
      throw std::invalid_argument(
          "dec4: closed-form star defect needs pure-periodic h for periodic f");
    for (const auto& [cell, v] : f.per.entries()) {
      const Site far = wrap_site(shifted_mask(cell.k, cell.mask, +1), *f.periods);
      Mat2<S> defect = (h_at(cell.k) - h_at(far)) * v;
      if (star_sign(cell.mask) < 0) defect = -defect;
      per_raw.emplace_back(Cell{far, mask_complement(cell.mask)}, defect);
    }
  }

  return detail::settle<S>(Field<S>::from_entries(std::move(fin_raw)),
                           Field<S>::from_entries(std::move(per_raw)), periods);
}

}  // namespace dec4
