/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file gasket.hpp
  \brief The ternary-coordinate spectrum of a Boolean function.

  A coordinate assigns each variable one of {absent, complemented, plain};
  its spectrum cell is the XOR of the function over the subcube where an
  absent digit lets the variable range over both values, a complemented
  digit pins it to 0 and a plain digit pins it to 1. With f|x=d defined as
  f|x=0 ^ f|x=1, the construction is the closed form of the recursion
  SG(f) = SG(f|x=d) + SG(f|x=0) + SG(f|x=1), and the three cells that
  differ only in one variable's digit always XOR to zero (triangle rule).

  The spectrum (fixed by the function) and the marking (the product terms
  of the ESOP currently under manipulation) are two distinct layers over
  the same coordinate space.
*/

#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

#include "sierp/bitvec.hpp"
#include "sierp/errors.hpp"
#include "sierp/term.hpp"
#include "sierp/truth_table.hpp"

namespace sierp {

inline constexpr std::uint32_t max_dense_spectrum_vars = 16;

inline std::uint64_t pow3(std::uint32_t n) {
  std::uint64_t p = 1;
  for (std::uint32_t i = 0; i < n; ++i)
    p *= 3;
  return p;
}

/*! \brief Base-3 address of a coordinate: sum of (digit_i - 1) * 3^(n-i). */
inline std::uint64_t coordinate_index(const coordinate& c) {
  std::uint64_t idx = 0;
  for (auto d : c.digits())
    idx = idx * 3 + (d - 1);
  return idx;
}

inline coordinate coordinate_from_index(std::uint32_t n, std::uint64_t idx) {
  std::vector<std::uint8_t> digits(n);
  for (std::uint32_t i = n; i-- > 0;) {
    digits[i] = static_cast<std::uint8_t>(idx % 3 + 1);
    idx /= 3;
  }
  return coordinate(std::move(digits));
}

/*! \brief Odometer step through all 3^n coordinates; false once exhausted. */
inline bool next_coordinate(coordinate& c) {
  for (std::uint32_t var = c.num_vars(); var >= 1; --var) {
    if (c.digit(var) < 3) {
      c.set_digit(var, c.digit(var) + 1);
      return true;
    }
    c.set_digit(var, 1);
  }
  return false;
}

struct structural_counts {
  std::uint32_t n = 0;
  std::uint64_t vertex_count = 0;   // 3^n addressable vertices
  std::uint64_t triangle_cells = 0; // 2^(n-1) * (2^n + 1), the full triangular grid
  std::uint64_t empty_cells = 0;    // grid cells hosting no vertex
  // (4^n - 2^n)/2 = C(2^n, 2): a commonly quoted closed form for the grid
  // size that undercounts the exact cell count by 2^n. Reported, not asserted.
  std::uint64_t alt_cell_count = 0;
};

inline structural_counts compute_structural_counts(std::uint32_t n) {
  if (n < 1 || n > 32)
    throw std::invalid_argument("structural_counts: n must be in 1..32");
  structural_counts s;
  s.n = n;
  s.vertex_count = pow3(n);
  const std::uint64_t p2 = 1ull << n;
  s.triangle_cells = (p2 / 2) * (p2 + 1);
  s.empty_cells = s.triangle_cells - s.vertex_count;
  s.alt_cell_count = (p2 / 2) * (p2 - 1);
  return s;
}

/*!
  \brief Two-dimensional grid position of a coordinate.

  i collects the plain digits, j the complemented ones, each weighted by
  2^(n-var). The grid row i + j equals the level of the vertex, and the
  3^n vertices are exactly the (i, j) pairs with disjoint bits; the other
  cells of the triangular grid stay empty.
*/
inline std::pair<std::uint64_t, std::uint64_t> grid_position(const coordinate& c) {
  std::uint64_t i = 0, j = 0;
  const std::uint32_t n = c.num_vars();
  for (std::uint32_t var = 1; var <= n; ++var) {
    const std::uint64_t w = 1ull << (n - var);
    if (c.digit(var) == digit_positive)
      i |= w;
    else if (c.digit(var) == digit_negative)
      j |= w;
  }
  return {i + j, j}; // (row, column)
}

namespace detail {

inline void spectrum_rec(const bitvec& f, std::uint32_t n, bitvec& out, std::uint64_t out_off) {
  if (n == 0) {
    out.set(out_off, f.get(0));
    return;
  }
  const std::uint64_t half = 1ull << (n - 1);
  bitvec f0 = f.slice(0, half);
  bitvec f1 = f.slice(half, half);
  bitvec fd = f0;
  fd.xor_with(f1);
  const std::uint64_t block = pow3(n - 1);
  spectrum_rec(fd, n - 1, out, out_off);
  spectrum_rec(f0, n - 1, out, out_off + block);
  spectrum_rec(f1, n - 1, out, out_off + 2 * block);
}

} // namespace detail

class gasket {
public:
  gasket(std::uint32_t n, bitvec spectrum) : n_(n), spectrum_(std::move(spectrum)) {
    if (spectrum_.size() != pow3(n_))
      throw std::invalid_argument("gasket: spectrum must have 3^n cells");
  }

  std::uint32_t num_vars() const { return n_; }
  const bitvec& spectrum() const { return spectrum_; }

  bool cell(const coordinate& c) const {
    if (c.num_vars() != n_)
      throw std::invalid_argument("gasket: coordinate arity mismatch");
    return spectrum_.get(coordinate_index(c));
  }

  std::set<coordinate>& marking() { return marking_; }
  const std::set<coordinate>& marking() const { return marking_; }

private:
  std::uint32_t n_;
  bitvec spectrum_;
  std::set<coordinate> marking_;
};

/*! \brief Materialize all 3^n spectrum cells (n <= 16). */
inline gasket build_spectrum(const truth_table& tt) {
  if (tt.num_vars() > max_dense_spectrum_vars)
    throw capacity_error("build_spectrum: dense spectrum capped at 16 variables");
  bitvec out(pow3(tt.num_vars()));
  detail::spectrum_rec(tt.bits(), tt.num_vars(), out, 0);
  return gasket(tt.num_vars(), std::move(out));
}

/*! \brief Single spectrum cell without materializing 3^n cells. */
inline bool spectrum_value(const truth_table& tt, const coordinate& c) {
  if (c.num_vars() != tt.num_vars())
    throw std::invalid_argument("spectrum_value: coordinate arity mismatch");
  bitvec cur = tt.bits();
  for (std::uint32_t var = 1; var <= tt.num_vars(); ++var) {
    const std::uint64_t half = cur.size() / 2;
    switch (c.digit(var)) {
    case digit_negative:
      cur = cur.slice(0, half);
      break;
    case digit_positive:
      cur = cur.slice(half, half);
      break;
    default: { // absent: fold the two halves
      bitvec lo = cur.slice(0, half);
      bitvec hi = cur.slice(half, half);
      lo.xor_with(hi);
      cur = std::move(lo);
      break;
    }
    }
  }
  return cur.get(0);
}

/*!
  \brief Spectrum of a single product term at one cell.

  The subcube XOR of a product term factors over the variables, and the
  per-variable factor vanishes exactly for the pairs (cell, term) in
  {(absent, absent), (complemented, plain), (plain, complemented)}.
*/
inline bool term_contribution(const term& t, const coordinate& cell) {
  if (t.num_vars() != cell.num_vars())
    throw std::invalid_argument("term_contribution: arity mismatch");
  for (std::uint32_t var = 1; var <= t.num_vars(); ++var) {
    const std::uint8_t cd = cell.digit(var);
    const std::uint8_t td = t.digit(var);
    if ((cd == digit_absent && td == digit_absent) ||
        (cd == digit_negative && td == digit_positive) ||
        (cd == digit_positive && td == digit_negative))
      return false;
  }
  return true;
}

/*! \brief A marking is a valid ESOP iff its contributions match the spectrum everywhere. */
inline bool marking_matches_spectrum(const gasket& g) {
  coordinate c(g.num_vars());
  do {
    bool acc = false;
    for (const auto& t : g.marking())
      acc ^= term_contribution(t, c);
    if (acc != g.cell(c))
      return false;
  } while (next_coordinate(c));
  return true;
}

} // namespace sierp
