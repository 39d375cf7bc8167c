#pragma once

// Combinatorial skeleton of the 4-dimensional lattice complex: multi-indices,
// direction masks, cells, shift operators and index boxes. Axis 0 is the time
// direction; axes are 0-based throughout the code.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dec4 {

inline constexpr int kAxes = 4;

using Site = std::array<std::int64_t, 4>;

/// Direction mask: bit a set means the cell extends along axis a (an edge
/// factor); clear means a point factor. Degree of the cell = popcount.
using DirMask = std::uint8_t;

inline constexpr DirMask kFullMask = 0x0F;
inline constexpr DirMask kEmptyMask = 0x00;

constexpr int mask_degree(DirMask m) { return std::popcount(static_cast<unsigned>(m & kFullMask)); }
constexpr bool mask_has(DirMask m, int axis) { return (m >> axis) & 1u; }
constexpr DirMask mask_complement(DirMask m) { return static_cast<DirMask>(~m & kFullMask); }
constexpr DirMask mask_with(DirMask m, int axis) { return static_cast<DirMask>(m | (1u << axis)); }
constexpr DirMask mask_without(DirMask m, int axis) { return static_cast<DirMask>(m & ~(1u << axis)); }

/// Number of set bits strictly below `axis`; the parity of this count drives
/// the sign bookkeeping of the boundary, coboundary and cup operators.
constexpr int mask_bits_below(DirMask m, int axis) {
  return std::popcount(static_cast<unsigned>(m & ((1u << axis) - 1u)));
}

/// Canonical slots for the C(4,p) direction masks of each degree, ordered by
/// ascending axis tuples. Degree-1 slots are the axes; degree-2 slots 0..5
/// correspond to the pairs (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
inline constexpr std::array<std::array<DirMask, 6>, 5> kDegreeMasks = {{
    {{0x0, 0, 0, 0, 0, 0}},
    {{0x1, 0x2, 0x4, 0x8, 0, 0}},
    {{0x3, 0x5, 0x9, 0x6, 0xA, 0xC}},
    {{0x7, 0xB, 0xD, 0xE, 0, 0}},
    {{0xF, 0, 0, 0, 0, 0}},
}};

inline constexpr std::array<int, 5> kDegreeCount = {1, 4, 6, 4, 1};

constexpr int masks_in_degree(int p) { return kDegreeCount[p]; }
constexpr DirMask degree_mask(int p, int slot) { return kDegreeMasks[p][slot]; }

/// Slot of `m` within its degree's canonical list (e.g. pair slot 0..5 for
/// 2-masks). Returns -1 for a mask outside 0x0..0xF.
constexpr int mask_slot(DirMask m) {
  const int p = mask_degree(m);
  for (int s = 0; s < kDegreeCount[p]; ++s)
    if (kDegreeMasks[p][s] == m) return s;
  return -1;
}

/// One lattice cell of the complex (or the dual basis cochain element): a base
/// site together with the set of axes the cell extends along.
struct Cell {
  Site k{0, 0, 0, 0};
  DirMask mask = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Site shifted(Site k, int axis, std::int64_t delta) {
  k[axis] += delta;
  return k;
}

/// Shift along every axis in `m` by `delta` (tau for +1, sigma for -1).
constexpr Site shifted_mask(Site k, DirMask m, std::int64_t delta) {
  for (int a = 0; a < kAxes; ++a)
    if (mask_has(m, a)) k[a] += delta;
  return k;
}

/// Shift along all four axes (the diagonal tau/sigma of the model).
constexpr Site shifted_all(Site k, std::int64_t delta) {
  return shifted_mask(k, kFullMask, delta);
}

/// Per-axis extents of the periodic part of a cochain; also the index wrap of
/// the periodic-lattice mode. All extents >= 1.
using Periods = std::array<std::int64_t, 4>;

inline constexpr Periods kParityPeriods = {2, 2, 2, 2};

constexpr std::int64_t wrap_coord(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

constexpr Site wrap_site(Site k, const Periods& p) {
  for (int a = 0; a < kAxes; ++a) k[a] = wrap_coord(k[a], p[a]);
  return k;
}

inline void check_periods(const Periods& p) {
  for (int a = 0; a < kAxes; ++a)
    if (p[a] < 1) throw std::invalid_argument("dec4: periodic extents must be >= 1");
}

/// Index box V: sites with 1 <= k_a <= n_a. The inner-product volume chain and
/// the verification suites run over boxes.
struct Box {
  std::array<std::int64_t, 4> n{1, 1, 1, 1};

  Box() = default;
  explicit Box(std::array<std::int64_t, 4> extents) : n(extents) { validate(); }
  Box(std::int64_t n0, std::int64_t n1, std::int64_t n2, std::int64_t n3) : n{n0, n1, n2, n3} {
    validate();
  }

  void validate() const {
    for (int a = 0; a < kAxes; ++a)
      if (n[a] < 1) throw std::invalid_argument("dec4: box extents must be >= 1");
  }

  std::int64_t volume() const { return n[0] * n[1] * n[2] * n[3]; }

  bool contains(const Site& k) const {
    for (int a = 0; a < kAxes; ++a)
      if (k[a] < 1 || k[a] > n[a]) return false;
    return true;
  }

  /// Visits every site of the box in lexicographic order.
  template <class Fn>
  void for_each_site(Fn&& fn) const {
    Site k;
    for (k[0] = 1; k[0] <= n[0]; ++k[0])
      for (k[1] = 1; k[1] <= n[1]; ++k[1])
        for (k[2] = 1; k[2] <= n[2]; ++k[2])
          for (k[3] = 1; k[3] <= n[3]; ++k[3]) fn(k);
  }

  friend bool operator==(const Box&, const Box&) = default;
};

inline std::string to_string(const Site& k) {
  std::string s = "(";
  for (int a = 0; a < kAxes; ++a) s += std::to_string(k[a]) + (a + 1 < kAxes ? "," : ")");
  return s;
}

inline std::string to_string(const Cell& c) {
  std::string s = to_string(c.k) + "{";
  bool first = true;
  for (int a = 0; a < kAxes; ++a)
    if (mask_has(c.mask, a)) {
      if (!first) s += ",";
      s += std::to_string(a + 1);
      first = false;
    }
  return s + "}";
}

}  // namespace dec4
