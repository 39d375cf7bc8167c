#pragma once

// Volume inner product, codifferential and Laplacian. The inner product of
// two forms over a box V is -tr of the pairing of the volume chain with
// phi cup star(psi); mismatched degrees pair to zero automatically because
// the cup then misses the top degree. Adjointness of d and delta holds
// exactly when phi vanishes on the far margin and psi on the near margin of
// the box; box-supported forms satisfy both.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dec4/gauge.hpp"
#include "dec4/hodge.hpp"

namespace dec4 {

/// Matrix value of the volume pairing: sum of the top-cell coefficients of
/// `w` over the base sites of the box.
template <class S>
Mat2<S> volume_pairing(const Box& box, const Cochain<S>& w) {
  Mat2<S> acc = mat_zero<S>();
  box.for_each_site([&](const Site& k) { acc += w.value(Cell{k, kFullMask}); });
  return acc;
}

/// Inner product (phi, psi) over the box: -tr<V, phi cup star(psi)>.
template <class S>
S inner_product(const Box& box, const Cochain<S>& phi, const Cochain<S>& psi) {
  return -volume_pairing(box, cup(phi, star(psi))).trace();
}

/// Codifferential: the star-conjugate of the coboundary. Lowers degree by
/// one; adjoint to the coboundary under the margin conditions.
template <class S>
Cochain<S> codifferential(const Cochain<S>& phi) {
  return star_inverse(coboundary(star(phi)));
}

/// Covariant codifferential of a 2-form:
/// delta_A F = star^{-1}( d star F + A cup star F - star F cup star(star A) ).
template <class S>
Cochain<S> covariant_codifferential(const Cochain<S>& a, const Cochain<S>& f) {
  return star_inverse(dual_field_residual(a, f, DualVariant::double_starred));
}

/// Covariant Laplacian d_A delta_A + delta_A d_A on 2-forms.
template <class S>
Cochain<S> covariant_laplacian(const Cochain<S>& a, const Cochain<S>& f) {
  const Cochain<S> up = covariant_differential(a, covariant_codifferential(a, f));
  const Cochain<S> down = covariant_codifferential(a, covariant_differential(a, f));
  return up + down;
}

/// True when every finite-part cell (site and far corners of its mask) lies
/// inside the box and the periodic part is empty; such forms meet both
/// margin conditions of the adjointness identities.
template <class S>
bool supported_in_box(const Cochain<S>& phi, const Box& box) {
  if (phi.periods) return false;
  for (const auto& [cell, v] : phi.fin.entries())
    if (!box.contains(cell.k)) return false;
  return true;
}

/// Adjointness defect (d phi, psi) - (phi, delta psi); zero for forms
/// supported in the box (psi one degree above phi).
template <class S>
S adjointness_residual(const Box& box, const Cochain<S>& phi, const Cochain<S>& psi) {
  return inner_product(box, coboundary(phi), psi) -
         inner_product(box, phi, codifferential(psi));
}

/// Covariant adjointness defect (d_A phi, psi) - (phi, delta_A psi) for a
/// 1-form phi and 2-form psi.
template <class S>
S covariant_adjointness_residual(const Box& box, const Cochain<S>& a,
                                 const Cochain<S>& phi, const Cochain<S>& psi) {
  return inner_product(box, covariant_differential(a, phi), psi) -
         inner_product(box, phi, covariant_codifferential(a, psi));
}

/// Trace-duality defect tr<V, phi cup psi> + tr<V, psi cup star(star phi)>
/// for a 1-form phi and 3-form psi; zero for box-supported pairs.
template <class S>
S trace_duality_residual(const Box& box, const Cochain<S>& phi, const Cochain<S>& psi) {
  return volume_pairing(box, cup(phi, psi)).trace() +
         volume_pairing(box, cup(psi, double_star(phi))).trace();
}

/// Difference-formula evaluation of the codifferential on a 2-form: each
/// edge component is a signed sum of backward differences of the three
/// plane components containing that edge direction. Shares nothing with
/// the compositional star/coboundary path; used to cross-check it.
template <class S>
Cochain<S> codifferential_by_components(const Cochain<S>& f) {
  for (const auto& [cell, v] : f.fin.entries())
    if (mask_degree(cell.mask) != 2)
      throw std::invalid_argument("dec4: codifferential_by_components needs a 2-form");
  for (const auto& [cell, v] : f.per.entries())
    if (mask_degree(cell.mask) != 2)
      throw std::invalid_argument("dec4: codifferential_by_components needs a 2-form");
  if (!f.fin.entries().empty() && !f.per.entries().empty())
    throw std::invalid_argument(
        "dec4: codifferential_by_components takes a pure finite or pure periodic form");

  struct Row {
    int slot;
    int source;
    int sign;
  };
  // Rows for output edge axis a: sign * (F^slot_k - F^slot_{k - e_source}).
  static constexpr Row kRows[kAxes][3] = {
      {{0, 1, +1}, {1, 2, +1}, {2, 3, +1}},
      {{0, 0, +1}, {3, 2, +1}, {4, 3, +1}},
      {{1, 0, +1}, {3, 1, -1}, {5, 3, +1}},
      {{2, 0, +1}, {4, 1, -1}, {5, 2, -1}},
  };

  const auto edge_value = [&](const Site& k, int axis) {
    Mat2<S> sum = mat_zero<S>();
    for (const Row& row : kRows[axis]) {
      const DirMask plane = degree_mask(2, row.slot);
      const Mat2<S> diff =
          f.value(Cell{k, plane}) - f.value(Cell{shifted(k, row.source, -1), plane});
      if (row.sign > 0)
        sum += diff;
      else
        sum -= diff;
    }
    return sum;
  };

  std::vector<typename Field<S>::Entry> raw;
  if (f.periods) {
    Site k{0, 0, 0, 0};
    const Periods& p = *f.periods;
    for (k[0] = 0; k[0] < p[0]; ++k[0])
      for (k[1] = 0; k[1] < p[1]; ++k[1])
        for (k[2] = 0; k[2] < p[2]; ++k[2])
          for (k[3] = 0; k[3] < p[3]; ++k[3])
            for (int axis = 0; axis < kAxes; ++axis)
              raw.emplace_back(Cell{k, degree_mask(1, axis)}, edge_value(k, axis));
    return make_periodic<S>(Field<S>::from_entries(std::move(raw)), p);
  }

  std::vector<Site> sites;
  for (const auto& [cell, v] : f.fin.entries()) {
    sites.push_back(cell.k);
    for (int axis = 0; axis < kAxes; ++axis) sites.push_back(shifted(cell.k, axis, +1));
  }
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  for (const Site& k : sites)
    for (int axis = 0; axis < kAxes; ++axis)
      raw.emplace_back(Cell{k, degree_mask(1, axis)}, edge_value(k, axis));
  return make_finite<S>(std::move(raw));
}

}  // namespace dec4
