#pragma once

// Reference implementations of the three core operators, built only on
// cells, chains and the pairing. The fast paths in calculus.hpp and
// hodge.hpp are verified against these:
//   - coboundary: evaluate the input on the boundary chain of every
//     candidate output cell;
//   - cup: per-axis tensor matching of cell pairs with an explicitly
//     counted interleaving sign;
//   - star: exhaustive search for the unique signed dual cell whose cup
//     against the input basis cell gives the metric-signed top cell.
// Shared with the fast paths: the lattice vocabulary and the cochain
// container, nothing else.

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dec4/chain.hpp"
#include "dec4/cochain.hpp"

namespace dec4 {

namespace oracle_detail {

/// Metric signature of a basis cell: product of per-axis factors, -1 on the
/// time axis and +1 on the three space axes.
inline int metric_sign(DirMask m) {
  int s = 1;
  for (int axis = 0; axis < kAxes; ++axis)
    if (mask_has(m, axis)) s *= (axis == 0) ? -1 : 1;
  return s;
}

/// Interleaving sign of the tensor cup: each right-factor edge on axis b
/// crosses every left-factor edge on a strictly higher axis.
inline int tensor_cup_sign(DirMask left, DirMask right) {
  int swaps = 0;
  for (int b = 0; b < kAxes; ++b) {
    if (!mask_has(right, b)) continue;
    for (int a = b + 1; a < kAxes; ++a)
      if (mask_has(left, a)) ++swaps;
  }
  return (swaps % 2 != 0) ? -1 : 1;
}

struct CellProduct {
  Cell cell;
  int sign;
};

/// Cup of two basis cells by the per-axis rule of the one-dimensional
/// complex: on each axis the factors combine as vertex*vertex at the same
/// point, vertex*edge at the same point, or edge*vertex at the far end of
/// the edge; edge*edge vanishes. `wrap` compares sites on the torus.
inline std::optional<CellProduct> cup_cells(const Cell& lhs, const Cell& rhs,
                                            const Periods* wrap) {
  Site out_site = lhs.k;
  DirMask out_mask = 0;
  for (int axis = 0; axis < kAxes; ++axis) {
    const bool le = mask_has(lhs.mask, axis);
    const bool re = mask_has(rhs.mask, axis);
    if (le && re) return std::nullopt;
    std::int64_t required = lhs.k[axis] + (le ? 1 : 0);
    if (wrap) required = wrap_coord(required, (*wrap)[axis]);
    if (required != rhs.k[axis]) return std::nullopt;
    if (le || re) out_mask = mask_with(out_mask, axis);
  }
  return CellProduct{Cell{out_site, out_mask}, tensor_cup_sign(lhs.mask, rhs.mask)};
}

/// Evaluates one finite field on a chain, with optional site wrapping.
template <class S>
Mat2<S> evaluate_on_chain(const Field<S>& f, const Chain& ch, const Periods* wrap) {
  Mat2<S> acc = mat_zero<S>();
  for (const auto& [cell, coeff] : ch.terms()) {
    const Cell where{wrap ? wrap_site(cell.k, *wrap) : cell.k, cell.mask};
    if (const Mat2<S>* v = f.find(where)) acc += ScalarOps<S>::from_int(coeff) * (*v);
  }
  return acc;
}

/// Candidate output cells of the coboundary of `f`: any cell whose boundary
/// can meet the support. A face of (k, N) sits at site k or k + e_j, so k
/// ranges over support sites and their backward neighbors.
template <class S>
std::vector<Cell> coboundary_candidates(const Field<S>& f, const Periods* wrap) {
  std::set<Cell> cells;
  for (const auto& [cell, v] : f.entries()) {
    std::vector<Site> sites{cell.k};
    for (int axis = 0; axis < kAxes; ++axis) {
      Site back = shifted(cell.k, axis, -1);
      if (wrap) back = wrap_site(back, *wrap);
      sites.push_back(back);
    }
    for (const Site& s : sites)
      for (DirMask m = 0; m <= kFullMask; ++m) cells.insert(Cell{s, m});
  }
  return {cells.begin(), cells.end()};
}

template <class S>
Field<S> coboundary_field(const Field<S>& f, const Periods* wrap) {
  std::vector<typename Field<S>::Entry> raw;
  for (const Cell& c : coboundary_candidates(f, wrap)) {
    std::vector<Chain::Term> boundary_terms;
    append_boundary_terms(c, 1, boundary_terms);
    const Mat2<S> v =
        evaluate_on_chain(f, Chain::from_terms(std::move(boundary_terms)), wrap);
    if (!mat_is_zero<S>(v)) raw.emplace_back(c, v);
  }
  return Field<S>::from_entries(std::move(raw));
}

template <class S>
Field<S> cup_fields(const Field<S>& lhs, const Field<S>& rhs, const Periods* wrap) {
  std::vector<typename Field<S>::Entry> raw;
  for (const auto& [lc, la] : lhs.entries())
    for (const auto& [rc, rb] : rhs.entries())
      if (const auto prod = cup_cells(lc, rc, wrap)) {
        Mat2<S> v = la * rb;
        if (prod->sign < 0) v = -v;
        raw.emplace_back(prod->cell, v);
      }
  return Field<S>::from_entries(std::move(raw));
}

struct SignedCell {
  Cell cell;
  int sign;
  auto operator<=>(const SignedCell&) const = default;
};

/// The dual of a basis cell is the unique signed cell whose cup against it
/// equals the metric-signed top cell over the base site. The search scans
/// every sign, mask and unit-hypercube displacement and certifies that
/// exactly one candidate passes.
inline SignedCell star_cell_by_search(const Cell& c, const Periods* wrap) {
  const Cell top{c.k, kFullMask};
  const int want = metric_sign(c.mask);
  std::set<SignedCell> hits;
  for (int corner = 0; corner < (1 << kAxes); ++corner) {
    Site m = c.k;
    for (int axis = 0; axis < kAxes; ++axis)
      if ((corner >> axis) & 1) m = shifted(m, axis, +1);
    if (wrap) m = wrap_site(m, *wrap);
    for (DirMask n = 0; n <= kFullMask; ++n)
      for (const int sign : {+1, -1}) {
        const auto prod = cup_cells(c, Cell{m, n}, wrap);
        if (prod && prod->cell == top && prod->sign * sign == want)
          hits.insert(SignedCell{Cell{m, n}, sign});
      }
  }
  if (hits.size() != 1)
    throw std::logic_error("dec4: dual cell search did not find a unique candidate");
  return *hits.begin();
}

template <class S>
Field<S> star_field(const Field<S>& f, const Periods* wrap) {
  std::vector<typename Field<S>::Entry> raw;
  for (const auto& [cell, v] : f.entries()) {
    const SignedCell dual = star_cell_by_search(cell, wrap);
    raw.emplace_back(dual.cell, dual.sign < 0 ? Mat2<S>(-v) : v);
  }
  return Field<S>::from_entries(std::move(raw));
}

}  // namespace oracle_detail

template <class S>
Cochain<S> oracle_coboundary(const Cochain<S>& phi) {
  Field<S> per;
  if (phi.periods) per = oracle_detail::coboundary_field(phi.per, &*phi.periods);
  return detail::settle<S>(oracle_detail::coboundary_field(phi.fin, nullptr),
                           std::move(per), phi.periods);
}

template <class S>
Cochain<S> oracle_cup(const Cochain<S>& lhs, const Cochain<S>& rhs) {
  const auto periods = detail::joint_periods(lhs, rhs);

  Field<S> fin = oracle_detail::cup_fields(lhs.fin, rhs.fin, nullptr);
  if (rhs.periods) {
    // Finite left against periodic right: localize the right pattern onto
    // the sites the left support can reach (its unit hypercube corners).
    std::vector<typename Field<S>::Entry> raw;
    for (const auto& [lc, la] : lhs.fin.entries())
      for (int corner = 0; corner < (1 << kAxes); ++corner) {
        Site m = lc.k;
        for (int axis = 0; axis < kAxes; ++axis)
          if ((corner >> axis) & 1) m = shifted(m, axis, +1);
        for (DirMask n = 0; n <= kFullMask; ++n) {
          const Mat2<S>* rb = rhs.per.find(Cell{wrap_site(m, *rhs.periods), n});
          if (!rb) continue;
          if (const auto prod = oracle_detail::cup_cells(lc, Cell{m, n}, nullptr)) {
            Mat2<S> v = la * (*rb);
            if (prod->sign < 0) v = -v;
            raw.emplace_back(prod->cell, v);
          }
        }
      }
    fin = field_add(fin, Field<S>::from_entries(std::move(raw)));
  }
  if (lhs.periods) {
    // Periodic left against finite right: localize the left pattern onto
    // the backward unit hypercube of each right support site.
    std::vector<typename Field<S>::Entry> raw;
    for (const auto& [rc, rb] : rhs.fin.entries())
      for (int corner = 0; corner < (1 << kAxes); ++corner) {
        Site k = rc.k;
        for (int axis = 0; axis < kAxes; ++axis)
          if ((corner >> axis) & 1) k = shifted(k, axis, -1);
        for (DirMask m = 0; m <= kFullMask; ++m) {
          const Mat2<S>* la = lhs.per.find(Cell{wrap_site(k, *lhs.periods), m});
          if (!la) continue;
          if (const auto prod = oracle_detail::cup_cells(Cell{k, m}, rc, nullptr)) {
            Mat2<S> v = (*la) * rb;
            if (prod->sign < 0) v = -v;
            raw.emplace_back(prod->cell, v);
          }
        }
      }
    fin = field_add(fin, Field<S>::from_entries(std::move(raw)));
  }

  Field<S> per;
  if (lhs.periods && rhs.periods)
    per = oracle_detail::cup_fields(lhs.per, rhs.per, &*periods);

  return detail::settle<S>(std::move(fin), std::move(per), periods);
}

template <class S>
Cochain<S> oracle_star(const Cochain<S>& phi) {
  Field<S> per;
  if (phi.periods) per = oracle_detail::star_field(phi.per, &*phi.periods);
  return detail::settle<S>(oracle_detail::star_field(phi.fin, nullptr), std::move(per),
                           phi.periods);
}

}  // namespace dec4
