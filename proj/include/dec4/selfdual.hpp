#pragma once

// Difference (anti-)self-duality. The operator equations star(F) = cF with
// c in {i, -i, 1, -1} reduce, by composing any componentwise equation with
// its partner, to the single-component relation F_{sigma k} = -c^2 F_k
// (sigma = all four coordinates down one). Because the closure factor -c^2
// depends on c only through its square, both imaginary modes imply
// F = F_sigma and both real modes imply F = -F_sigma. The library exposes
// two diagonal reductions per mode: the conventional printed pairing
// (diagonal_duality_residual, which flips the sign on the two anti modes)
// and the derived consequence (diagonal_consequence_residual). They differ
// exactly on the anti modes; the acceptance suite reports both honestly.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dec4/gauge.hpp"
#include "dec4/hodge.hpp"

namespace dec4 {

enum class DualityMode {
  selfdual_imag,      // star F = iF
  antiselfdual_imag,  // star F = -iF
  selfdual_real,      // star F = F
  antiselfdual_real   // star F = -F
};

inline const char* to_string(DualityMode m) {
  switch (m) {
    case DualityMode::selfdual_imag: return "selfdual_i";
    case DualityMode::antiselfdual_imag: return "antiselfdual_i";
    case DualityMode::selfdual_real: return "selfdual_real";
    case DualityMode::antiselfdual_real: return "antiselfdual_real";
  }
  return "unknown";
}

inline constexpr std::array<DualityMode, 4> kDualityModes = {
    DualityMode::selfdual_imag, DualityMode::antiselfdual_imag,
    DualityMode::selfdual_real, DualityMode::antiselfdual_real};

template <class S>
S duality_factor(DualityMode m) {
  switch (m) {
    case DualityMode::selfdual_imag: return ScalarOps<S>::imag_unit();
    case DualityMode::antiselfdual_imag: return -ScalarOps<S>::imag_unit();
    case DualityMode::selfdual_real: return ScalarOps<S>::one();
    case DualityMode::antiselfdual_real: return -ScalarOps<S>::one();
  }
  throw std::logic_error("dec4: unknown duality mode");
}

/// Relation sign s of the conventional reduced form F_k = s * F_{sigma k}
/// attached to each mode (the printed pairing: the anti modes flip s).
inline int printed_relation_sign(DualityMode m) {
  switch (m) {
    case DualityMode::selfdual_imag: return +1;
    case DualityMode::antiselfdual_imag: return -1;
    case DualityMode::selfdual_real: return -1;
    case DualityMode::antiselfdual_real: return +1;
  }
  throw std::logic_error("dec4: unknown duality mode");
}

/// Relation sign actually implied by the operator equation: s = -c^2, so +1
/// for the imaginary modes and -1 for the real ones.
inline int consequence_relation_sign(DualityMode m) {
  switch (m) {
    case DualityMode::selfdual_imag:
    case DualityMode::antiselfdual_imag:
      return +1;
    case DualityMode::selfdual_real:
    case DualityMode::antiselfdual_real:
      return -1;
  }
  throw std::logic_error("dec4: unknown duality mode");
}

/// Operator-form residual star(F) - cF.
template <class S>
Cochain<S> duality_residual(const Cochain<S>& f, DualityMode m) {
  return star(f) - (duality_factor<S>(m) * f);
}

/// Componentwise combination F_k - s F_{sigma k} on every cell, both parts.
template <class S>
Cochain<S> diagonal_combination(const Cochain<S>& f, int s) {
  const S sv = ScalarOps<S>::from_int(s);
  std::vector<typename Field<S>::Entry> fin_raw;
  fin_raw.reserve(f.fin.size() * 2);
  for (const auto& [cell, v] : f.fin.entries()) {
    fin_raw.emplace_back(cell, v);
    fin_raw.emplace_back(Cell{shifted_all(cell.k, +1), cell.mask}, Mat2<S>(-(sv * v)));
  }
  std::vector<typename Field<S>::Entry> per_raw;
  if (f.periods) {
    per_raw.reserve(f.per.size() * 2);
    for (const auto& [cell, v] : f.per.entries()) {
      per_raw.emplace_back(cell, v);
      per_raw.emplace_back(
          Cell{wrap_site(shifted_all(cell.k, +1), *f.periods), cell.mask},
          Mat2<S>(-(sv * v)));
    }
  }
  return detail::settle<S>(Field<S>::from_entries(std::move(fin_raw)),
                           Field<S>::from_entries(std::move(per_raw)), f.periods);
}

/// Reduced diagonal form in the conventional printed pairing.
template <class S>
Cochain<S> diagonal_duality_residual(const Cochain<S>& f, DualityMode m) {
  return diagonal_combination(f, printed_relation_sign(m));
}

/// Reduced diagonal form actually implied by the mode's operator equation.
template <class S>
Cochain<S> diagonal_consequence_residual(const Cochain<S>& f, DualityMode m) {
  return diagonal_combination(f, consequence_relation_sign(m));
}

/// Connection-level form of the printed diagonal system: the plaquette
/// expansion of the curvature evaluated at k and at sigma k, combined with
/// the mode's relation sign. Matches
/// diagonal_duality_residual(curvature(A), mode) coefficientwise.
template <class S>
Cochain<S> duality_residual_from_connection(const Cochain<S>& a, DualityMode m) {
  return diagonal_combination(curvature_by_components(a), printed_relation_sign(m));
}

/// Double-star sign law: a 2-form obeying F_k = s F_{sigma k} has
/// star(star(F)) = -sF. Exact in exact mode, tolerance-checked otherwise.
template <class S>
bool double_star_sign_check(const Cochain<S>& f, int relation_sign, double tol = 1e-10) {
  const S sv = ScalarOps<S>::from_int(relation_sign);
  return residual_vanishes(double_star(f) + (sv * f), tol);
}

/// Mode-level convenience: checks the sign law for the relation with which
/// the mode is conventionally paired.
template <class S>
bool double_star_sign_check(const Cochain<S>& f, DualityMode m, double tol = 1e-10) {
  return double_star_sign_check(f, printed_relation_sign(m), tol);
}

struct TrivialityReport {
  bool satisfies = false;
  std::optional<Cell> witness;  // cell where the relation forces a contradiction
};

/// A nonzero finitely supported 2-form cannot satisfy F_k = s F_{sigma k}
/// for all k: at a support cell with maximal coordinate sum the relation
/// propagates a nonzero value one diagonal step further out. Returns the
/// verdict for `f` and, when it fails, that witness cell.
template <class S>
TrivialityReport finite_support_triviality(const Cochain<S>& f, DualityMode m,
                                           double tol = 1e-10) {
  if (f.periods)
    throw std::invalid_argument("dec4: triviality check expects finite support");
  TrivialityReport report;
  if (f.fin.empty()) {
    report.satisfies = true;
    return report;
  }
  const Cochain<S> resid = diagonal_duality_residual(f, m);
  report.satisfies = residual_vanishes(resid, tol);
  if (report.satisfies) return report;

  const typename Field<S>::Entry* top = nullptr;
  std::int64_t best = 0;
  for (const auto& e : f.fin.entries()) {
    const std::int64_t sum = e.first.k[0] + e.first.k[1] + e.first.k[2] + e.first.k[3];
    if (!top || sum > best) {
      top = &e;
      best = sum;
    }
  }
  // One diagonal step beyond the extremal support cell the field is zero,
  // but the relation demands s * value(top); that cell is the witness.
  const Cell beyond{shifted_all(top->first.k, +1), top->first.mask};
  const bool contradiction = ScalarOps<S>::exact
                                 ? !mat_is_zero<S>(resid.value(beyond))
                                 : mat_max_abs<S>(resid.value(beyond)) > tol;
  report.witness = contradiction ? beyond : resid.fin.entries().front().first;
  return report;
}

}  // namespace dec4
