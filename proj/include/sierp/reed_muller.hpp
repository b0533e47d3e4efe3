/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file reed_muller.hpp
  \brief Fixed-polarity Reed-Muller transforms.

  Coefficients are indexed by subset code: the decoration of x_i in a
  product term contributes 2^(n-i). A polarity entry of 0 means the
  variable appears plain in every term, 1 means complemented.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sierp/bitvec.hpp"
#include "sierp/truth_table.hpp"

namespace sierp {

namespace detail {

inline constexpr std::uint64_t stride_masks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

// One butterfly pass along the axis with the given bit position.
// pol 0: coefficients with the bit set absorb the ones without (hi ^= lo);
// pol 1: the opposite direction (lo ^= hi). The pass is its own inverse.
inline void rm_axis_pass(bitvec& a, std::uint32_t bit_pos, bool pol) {
  auto& w = a.words();
  if (bit_pos < 6) {
    const std::uint64_t lo_mask = stride_masks[bit_pos];
    const std::uint32_t s = 1u << bit_pos;
    for (auto& word : w)
      word ^= pol ? ((word & ~lo_mask) >> s) : ((word & lo_mask) << s);
  } else {
    const std::size_t stride = 1ull << (bit_pos - 6); // in words
    for (std::size_t base = 0; base < w.size(); base += 2 * stride)
      for (std::size_t k = 0; k < stride; ++k) {
        if (pol)
          w[base + k] ^= w[base + stride + k];
        else
          w[base + stride + k] ^= w[base + k];
      }
  }
}

} // namespace detail

/*!
  \brief All 2^n fixed-polarity Reed-Muller coefficients.

  Bit m of the result is the coefficient of the product term whose
  variable subset has code m, each member decorated by the polarity.
*/
inline bitvec fprm_coefficients(const truth_table& tt, const std::vector<std::uint8_t>& polarity) {
  const std::uint32_t n = tt.num_vars();
  if (polarity.size() != n)
    throw std::invalid_argument("fprm_coefficients: polarity arity mismatch");
  bitvec a = tt.bits();
  std::uint64_t pol_mask = 0;
  for (std::uint32_t var = 1; var <= n; ++var) {
    const std::uint32_t bit_pos = n - var;
    detail::rm_axis_pass(a, bit_pos, polarity[var - 1] != 0);
    if (polarity[var - 1])
      pol_mask |= 1ull << bit_pos;
  }
  if (pol_mask == 0)
    return a;
  // Complemented axes leave the coefficient of subset S at index S ^ pol.
  bitvec out(a.size());
  for (std::uint64_t m = 0; m < a.size(); ++m)
    out.set(m, a.get(m ^ pol_mask));
  return out;
}

struct fixed_polarity_search {
  std::vector<std::uint8_t> polarity;
  std::uint64_t term_count = 0;
  bool exhaustive = false;
};

/*!
  \brief Polarity with the fewest FPRM terms.

  Exhaustive Gray-code walk over all 2^n polarities for n <= 16 (each step
  flips one axis of the coefficient array in place); a greedy per-variable
  descent above that. Ties go to the numerically smallest polarity code.
*/
inline fixed_polarity_search best_fixed_polarity(const truth_table& tt) {
  const std::uint32_t n = tt.num_vars();
  fixed_polarity_search best;
  best.polarity.assign(n, 0);

  bitvec coeff = tt.bits();
  for (std::uint32_t var = 1; var <= n; ++var)
    detail::rm_axis_pass(coeff, n - var, false);
  best.term_count = coeff.count();

  // Flipping the polarity of one variable rewrites f = A ^ l*B as
  // (A^B) ^ l'*B: coefficients without the variable absorb the ones with
  // it (lo ^= hi), a self-inverse pass that leaves subset codes in place.
  if (n <= 16) {
    best.exhaustive = true;
    std::uint64_t best_code = 0;
    std::uint64_t pol_code = 0; // bit (n - var) set when var is complemented
    for (std::uint64_t g = 1; g < (1ull << n); ++g) {
      const std::uint32_t bit_pos = std::countr_zero(g);
      detail::rm_axis_pass(coeff, bit_pos, true);
      pol_code ^= 1ull << bit_pos;
      const std::uint64_t cnt = coeff.count();
      if (cnt < best.term_count || (cnt == best.term_count && pol_code < best_code)) {
        best.term_count = cnt;
        best_code = pol_code;
      }
    }
    for (std::uint32_t var = 1; var <= n; ++var)
      best.polarity[var - 1] = (best_code >> (n - var)) & 1ull;
    return best;
  }

  for (std::uint32_t var = 1; var <= n; ++var) {
    detail::rm_axis_pass(coeff, n - var, true);
    const std::uint64_t flipped = coeff.count();
    if (flipped < best.term_count) {
      best.term_count = flipped;
      best.polarity[var - 1] = 1;
    } else {
      detail::rm_axis_pass(coeff, n - var, true); // undo
    }
  }
  return best;
}

} // namespace sierp
