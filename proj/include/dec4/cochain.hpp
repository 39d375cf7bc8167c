#pragma once

// Matrix-valued cochains. A cochain assigns a 2x2 matrix to finitely many
// basis cells, plus optionally a fully periodic background given by one
// fundamental domain. The split is unique (a periodic function with finite
// support is zero), so equality of the parts is equality of the functions.
// The periodic part is what makes pointwise-infinite objects such as parity
// gauge transforms exactly representable.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "dec4/chain.hpp"
#include "dec4/lattice.hpp"
#include "dec4/matrix.hpp"

namespace dec4 {

/// Sorted flat map from cells to nonzero matrices. Construction goes through
/// from_entries, which sorts, accumulates duplicate cells and drops exact
/// zeros; the fixed cell order makes every later summation deterministic.
template <class S>
class Field {
 public:
  using Entry = std::pair<Cell, Mat2<S>>;

  Field() = default;

  static Field from_entries(std::vector<Entry> raw) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Field out;
    out.entries_.reserve(raw.size());
    for (auto& e : raw) {
      if (!out.entries_.empty() && out.entries_.back().first == e.first)
        out.entries_.back().second += e.second;
      else
        out.entries_.push_back(std::move(e));
    }
    std::erase_if(out.entries_,
                  [](const Entry& e) { return mat_is_zero<S>(e.second); });
    return out;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  const Mat2<S>* find(const Cell& c) const {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), c,
        [](const Entry& e, const Cell& key) { return e.first < key; });
    return (it != entries_.end() && it->first == c) ? &it->second : nullptr;
  }

  Mat2<S> value(const Cell& c) const {
    const Mat2<S>* p = find(c);
    return p ? *p : mat_zero<S>();
  }

  friend bool operator==(const Field& a, const Field& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (a.entries_[i].first != b.entries_[i].first) return false;
      if (!mat_equal<S>(a.entries_[i].second, b.entries_[i].second)) return false;
    }
    return true;
  }

 private:
  std::vector<Entry> entries_;
};

template <class S>
Field<S> field_add(const Field<S>& a, const Field<S>& b) {
  std::vector<typename Field<S>::Entry> raw(a.entries());
  raw.insert(raw.end(), b.entries().begin(), b.entries().end());
  return Field<S>::from_entries(std::move(raw));
}

template <class S>
Field<S> field_negate(const Field<S>& a) {
  std::vector<typename Field<S>::Entry> raw(a.entries());
  for (auto& e : raw) e.second = -e.second;
  return Field<S>::from_entries(std::move(raw));
}

template <class S>
Field<S> field_scale(const S& s, const Field<S>& a) {
  std::vector<typename Field<S>::Entry> raw(a.entries());
  for (auto& e : raw) e.second = s * e.second;
  return Field<S>::from_entries(std::move(raw));
}

/// Finite part plus optional periodic background. Invariants: `periods` is
/// engaged exactly when `per` is nonempty, and every `per` cell site lies in
/// the fundamental domain [0, periods)^4.
template <class S>
struct Cochain {
  Field<S> fin;
  Field<S> per;
  std::optional<Periods> periods;

  bool is_zero() const { return fin.empty() && per.empty(); }

  /// Value of the underlying function at one cell, both parts combined.
  Mat2<S> value(const Cell& c) const {
    Mat2<S> v = fin.value(c);
    if (periods) v += per.value(Cell{wrap_site(c.k, *periods), c.mask});
    return v;
  }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    if (a.fin != b.fin) return false;
    if (a.periods.has_value() != b.periods.has_value()) return false;
    if (a.periods && *a.periods != *b.periods) return false;
    return a.per == b.per;
  }
};

template <class S>
Cochain<S> make_finite(Field<S> f) {
  Cochain<S> out;
  out.fin = std::move(f);
  return out;
}

template <class S>
Cochain<S> make_finite(std::vector<typename Field<S>::Entry> raw) {
  return make_finite<S>(Field<S>::from_entries(std::move(raw)));
}

namespace detail {

template <class S>
Field<S> wrap_field(const Field<S>& f, const Periods& periods) {
  std::vector<typename Field<S>::Entry> raw(f.entries());
  for (auto& e : raw) e.first.k = wrap_site(e.first.k, periods);
  return Field<S>::from_entries(std::move(raw));
}

}  // namespace detail

/// Periodic cochain from one (not necessarily canonical) set of
/// representatives; sites are wrapped into the fundamental domain.
template <class S>
Cochain<S> make_periodic(const Field<S>& pattern, const Periods& periods) {
  check_periods(periods);
  Cochain<S> out;
  out.per = detail::wrap_field(pattern, periods);
  if (!out.per.empty()) out.periods = periods;
  return out;
}

template <class S>
Cochain<S> make_periodic(std::vector<typename Field<S>::Entry> raw, const Periods& periods) {
  return make_periodic<S>(Field<S>::from_entries(std::move(raw)), periods);
}

namespace detail {

/// Merged periods of two operands: equal or one-sided, never conflicting.
template <class S>
std::optional<Periods> joint_periods(const Cochain<S>& a, const Cochain<S>& b) {
  if (a.periods && b.periods && *a.periods != *b.periods)
    throw std::invalid_argument("dec4: mixing cochains with different periods");
  return a.periods ? a.periods : b.periods;
}

/// Restores the invariant that `periods` is engaged iff `per` is nonempty.
template <class S>
Cochain<S> settle(Field<S> fin, Field<S> per, std::optional<Periods> periods) {
  Cochain<S> out;
  out.fin = std::move(fin);
  out.per = std::move(per);
  out.periods = out.per.empty() ? std::nullopt : periods;
  return out;
}

}  // namespace detail

template <class S>
Cochain<S> operator+(const Cochain<S>& a, const Cochain<S>& b) {
  auto periods = detail::joint_periods(a, b);
  return detail::settle<S>(field_add(a.fin, b.fin), field_add(a.per, b.per), periods);
}

template <class S>
Cochain<S> operator-(const Cochain<S>& a) {
  return detail::settle<S>(field_negate(a.fin), field_negate(a.per), a.periods);
}

template <class S>
Cochain<S> operator-(const Cochain<S>& a, const Cochain<S>& b) {
  return a + (-b);
}

template <class S>
Cochain<S> operator*(const S& s, const Cochain<S>& a) {
  return detail::settle<S>(field_scale(s, a.fin), field_scale(s, a.per), a.periods);
}

/// Pairing of a chain against a cochain: sum of coefficient-weighted values.
/// Evaluation uses the full function (finite plus periodic part).
template <class S>
Mat2<S> pair_chain(const Chain& ch, const Cochain<S>& phi) {
  Mat2<S> acc = mat_zero<S>();
  for (const auto& [cell, coeff] : ch.terms())
    acc += ScalarOps<S>::from_int(coeff) * phi.value(cell);
  return acc;
}

/// True when every cell of either part has the given degree. The zero
/// cochain is homogeneous of every degree.
template <class S>
bool is_homogeneous(const Cochain<S>& phi, int degree) {
  const auto check = [&](const Field<S>& f) {
    for (const auto& e : f.entries())
      if (mask_degree(e.first.mask) != degree) return false;
    return true;
  };
  return check(phi.fin) && check(phi.per);
}

/// Degree of a homogeneous nonzero cochain; throws on mixed degrees, returns
/// `fallback` for the zero cochain.
template <class S>
int homogeneous_degree(const Cochain<S>& phi, int fallback = 0) {
  int deg = -1;
  const auto scan = [&](const Field<S>& f) {
    for (const auto& e : f.entries()) {
      const int d = mask_degree(e.first.mask);
      if (deg == -1) deg = d;
      if (d != deg) throw std::invalid_argument("dec4: cochain has mixed degrees");
    }
  };
  scan(phi.fin);
  scan(phi.per);
  return deg == -1 ? fallback : deg;
}

/// Largest entry magnitude across both parts; the float-mode residual norm.
template <class S>
double max_abs(const Cochain<S>& phi) {
  double v = 0.0;
  for (const auto& e : phi.fin.entries()) v = std::max(v, mat_max_abs<S>(e.second));
  for (const auto& e : phi.per.entries()) v = std::max(v, mat_max_abs<S>(e.second));
  return v;
}

template <class S>
bool approx_zero(const Cochain<S>& phi, double tol) {
  return max_abs(phi) <= tol;
}

/// Mode-appropriate vanishing: literal emptiness for the exact scalar,
/// entrywise tolerance for floats.
template <class S>
bool residual_vanishes(const Cochain<S>& phi, double tol = 1e-10) {
  return ScalarOps<S>::exact ? phi.is_zero() : approx_zero(phi, tol);
}

template <class S>
bool cochains_match(const Cochain<S>& a, const Cochain<S>& b, double tol = 1e-10) {
  return residual_vanishes(a - b, tol);
}

}  // namespace dec4
