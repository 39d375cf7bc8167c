#pragma once

// Integer chains: formal sums of lattice cells with int64 coefficients.
// Chains carry the boundary operator; cochains (cochain.hpp) are evaluated
// against them through the pairing. The reference implementations in
// oracle.hpp are built on this module and nothing else.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "dec4/lattice.hpp"

namespace dec4 {

/// Sorted, coalesced, zero-free integer combination of cells.
class Chain {
 public:
  using Term = std::pair<Cell, std::int64_t>;

  Chain() = default;

  static Chain from_terms(std::vector<Term> raw) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    Chain out;
    for (auto& t : raw) {
      if (!out.terms_.empty() && out.terms_.back().first == t.first)
        out.terms_.back().second += t.second;
      else
        out.terms_.push_back(t);
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.second == 0; });
    return out;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t coefficient(const Cell& c) const {
    const auto it = std::lower_bound(
        terms_.begin(), terms_.end(), c,
        [](const Term& t, const Cell& key) { return t.first < key; });
    return (it != terms_.end() && it->first == c) ? it->second : 0;
  }

  friend bool operator==(const Chain&, const Chain&) = default;

  friend Chain operator+(const Chain& a, const Chain& b) {
    std::vector<Term> raw = a.terms_;
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    return from_terms(std::move(raw));
  }

  friend Chain operator-(const Chain& a, const Chain& b) { return a + (-b); }

  Chain operator-() const {
    Chain out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

 private:
  std::vector<Term> terms_;
};

inline Chain cell_chain(const Cell& c, std::int64_t coeff = 1) {
  return Chain::from_terms({{c, coeff}});
}

/// Boundary of one basis cell: each edge axis j of the cell contributes the
/// two opposite faces orthogonal to j, signed by the number of cell axes
/// below j.
inline void append_boundary_terms(const Cell& c, std::int64_t coeff,
                                  std::vector<Chain::Term>& out) {
  for (int axis = 0; axis < kAxes; ++axis) {
    if (!mask_has(c.mask, axis)) continue;
    const std::int64_t s = (mask_bits_below(c.mask, axis) % 2 == 0) ? coeff : -coeff;
    const DirMask face = mask_without(c.mask, axis);
    out.emplace_back(Cell{shifted(c.k, axis, +1), face}, s);
    out.emplace_back(Cell{c.k, face}, -s);
  }
}

inline Chain boundary(const Chain& ch) {
  std::vector<Chain::Term> raw;
  raw.reserve(ch.size() * 2 * kAxes);
  for (const auto& [cell, coeff] : ch.terms()) append_boundary_terms(cell, coeff, raw);
  return Chain::from_terms(std::move(raw));
}

/// Sum of all top cells whose base site lies in the box: the chain paired
/// against 4-forms by the volume functional.
inline Chain volume_chain(const Box& box) {
  std::vector<Chain::Term> raw;
  raw.reserve(static_cast<std::size_t>(box.volume()));
  box.for_each_site([&](const Site& k) { raw.emplace_back(Cell{k, kFullMask}, 1); });
  return Chain::from_terms(std::move(raw));
}

}  // namespace dec4
