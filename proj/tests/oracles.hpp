/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

// Independent reference implementations used only by the tests. Each one
// computes from the defining property (brute force, enumeration,
// interpolation) and deliberately shares no code with the library paths
// it checks.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sierp/esop.hpp"
#include "sierp/gf4.hpp"
#include "sierp/gfsop.hpp"
#include "sierp/rng.hpp"
#include "sierp/term.hpp"
#include "sierp/truth_table.hpp"

namespace oracles {

// XOR of f over the subcube a coordinate selects: absent digits range
// over both values, complemented pins to 0, plain pins to 1.
inline bool spectrum_cell(const sierp::truth_table& tt, const sierp::coordinate& c) {
  const std::uint32_t n = tt.num_vars();
  bool acc = false;
  for (std::uint64_t idx = 0; idx < tt.num_points(); ++idx) {
    bool in_subcube = true;
    for (std::uint32_t var = 1; var <= n && in_subcube; ++var) {
      const bool bit = (idx >> (n - var)) & 1ull;
      if (c.digit(var) == sierp::digit_negative && bit)
        in_subcube = false;
      if (c.digit(var) == sierp::digit_positive && !bit)
        in_subcube = false;
    }
    if (in_subcube)
      acc ^= tt.value(idx);
  }
  return acc;
}

// Plain byte-array butterfly for fixed-polarity Reed-Muller coefficients;
// result indexed by subset code (bit 2^(n-i) set when x_i is in the term).
inline std::vector<std::uint8_t> rm_butterfly(const sierp::truth_table& tt,
                                              const std::vector<std::uint8_t>& polarity) {
  const std::uint32_t n = tt.num_vars();
  std::vector<std::uint8_t> a(tt.num_points());
  for (std::uint64_t i = 0; i < a.size(); ++i)
    a[i] = tt.value(i);
  for (std::uint32_t var = 1; var <= n; ++var) {
    const std::uint64_t stride = 1ull << (n - var);
    for (std::uint64_t base = 0; base < a.size(); base += 2 * stride)
      for (std::uint64_t k = 0; k < stride; ++k) {
        if (polarity[var - 1])
          a[base + k] ^= a[base + stride + k];
        else
          a[base + stride + k] ^= a[base + k];
      }
  }
  if (std::uint64_t pol_mask = [&] {
        std::uint64_t m = 0;
        for (std::uint32_t var = 1; var <= n; ++var)
          if (polarity[var - 1])
            m |= 1ull << (n - var);
        return m;
      }()) {
    std::vector<std::uint8_t> out(a.size());
    for (std::uint64_t m = 0; m < a.size(); ++m)
      out[m] = a[m ^ pol_mask];
    return out;
  }
  return a;
}

// Evaluate an ESOP straight from the definition.
inline bool eval_esop(const sierp::esop& e, const sierp::assignment& a) {
  bool acc = false;
  for (const auto& t : e.terms()) {
    bool prod = true;
    for (std::uint32_t var = 1; var <= t.num_vars(); ++var) {
      const bool bit = a.bits[var - 1];
      if (t.digit(var) == sierp::digit_negative && bit)
        prod = false;
      if (t.digit(var) == sierp::digit_positive && !bit)
        prod = false;
    }
    acc ^= prod;
  }
  return acc;
}

inline bool esop_equals(const sierp::esop& e, const sierp::truth_table& tt) {
  for (std::uint64_t idx = 0; idx < tt.num_points(); ++idx)
    if (eval_esop(e, sierp::assignment::from_index(tt.num_vars(), idx)) != tt.value(idx))
      return false;
  return true;
}

inline bool esops_equal(const sierp::esop& a, const sierp::esop& b) {
  const std::uint32_t n = a.num_vars();
  for (std::uint64_t idx = 0; idx < (1ull << n); ++idx) {
    const auto p = sierp::assignment::from_index(n, idx);
    if (eval_esop(a, p) != eval_esop(b, p))
      return false;
  }
  return true;
}

// Smallest number of product terms whose XOR equals tt, searching all
// subsets of the 3^n candidate terms up to max_terms. nullopt if the
// cap is too small.
inline std::optional<std::uint32_t> min_esop_terms(const sierp::truth_table& tt,
                                                   std::uint32_t max_terms) {
  const std::uint32_t n = tt.num_vars();
  std::uint64_t candidates = 1;
  for (std::uint32_t i = 0; i < n; ++i)
    candidates *= 3;

  // truth mask of each candidate term
  std::vector<std::uint64_t> masks(candidates, 0);
  for (std::uint64_t code = 0; code < candidates; ++code) {
    std::uint64_t c = code;
    std::vector<std::uint8_t> digits(n);
    for (std::uint32_t i = n; i-- > 0;) {
      digits[i] = static_cast<std::uint8_t>(c % 3 + 1);
      c /= 3;
    }
    const sierp::term t{std::vector<std::uint8_t>(digits)};
    for (std::uint64_t idx = 0; idx < tt.num_points(); ++idx)
      if (t.evaluates(sierp::assignment::from_index(n, idx)))
        masks[code] |= 1ull << idx;
  }

  std::uint64_t target = 0;
  for (std::uint64_t idx = 0; idx < tt.num_points(); ++idx)
    if (tt.value(idx))
      target |= 1ull << idx;

  if (target == 0)
    return 0;

  std::vector<std::uint64_t> chosen;
  auto search = [&](auto&& self, std::uint64_t acc, std::uint64_t start,
                    std::uint32_t left) -> bool {
    if (acc == target)
      return true;
    if (left == 0)
      return false;
    for (std::uint64_t c = start; c < candidates; ++c)
      if (self(self, acc ^ masks[c], c + 1, left - 1))
        return true;
    return false;
  };
  for (std::uint32_t size = 1; size <= max_terms; ++size)
    if (search(search, 0, 0, size))
      return size;
  return std::nullopt;
}

// GF(4) helpers straight from the definitions ------------------------------

inline std::uint8_t gf4_mul_slow(std::uint8_t a, std::uint8_t b) {
  // carry-less multiply of the 2-bit polynomials, reduced mod x^2 + x + 1
  std::uint8_t prod = 0;
  for (int i = 0; i < 2; ++i)
    if ((a >> i) & 1)
      prod ^= static_cast<std::uint8_t>(b << i);
  for (int d = 3; d >= 2; --d)
    if ((prod >> d) & 1)
      prod ^= static_cast<std::uint8_t>(0b111 << (d - 2)); // x^2+x+1 shifted
  return prod & 3;
}

// The unique coefficient vector with f(x) = c0 + c1 y + c2 y^2 + c3 y^3
// for y = x + shift, found by trying all 256 vectors.
inline std::array<std::uint8_t, 4> poly_coeffs(const std::array<std::uint8_t, 4>& f,
                                               std::uint8_t shift) {
  for (int c0 = 0; c0 < 4; ++c0)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2)
        for (int c3 = 0; c3 < 4; ++c3) {
          bool ok = true;
          for (std::uint8_t x = 0; x < 4 && ok; ++x) {
            const std::uint8_t y = x ^ shift;
            const std::uint8_t y2 = gf4_mul_slow(y, y);
            const std::uint8_t y3 = gf4_mul_slow(y2, y);
            std::uint8_t v = static_cast<std::uint8_t>(c0);
            v ^= gf4_mul_slow(static_cast<std::uint8_t>(c1), y);
            v ^= gf4_mul_slow(static_cast<std::uint8_t>(c2), y2);
            v ^= gf4_mul_slow(static_cast<std::uint8_t>(c3), y3);
            if (v != f[x])
              ok = false;
          }
          if (ok)
            return {static_cast<std::uint8_t>(c0), static_cast<std::uint8_t>(c1),
                    static_cast<std::uint8_t>(c2), static_cast<std::uint8_t>(c3)};
        }
  return {255, 255, 255, 255}; // unreachable: the basis spans all functions
}

inline bool gfsop_equals(const sierp::gfsop& g, const sierp::quaternary_function& f) {
  for (std::uint64_t idx = 0; idx < f.num_points(); ++idx)
    if (g.eval(sierp::point_from_index(f.num_vars(), idx)) != f.value(idx))
      return false;
  return true;
}

// Deterministic random truth table.
inline sierp::truth_table random_tt(std::uint32_t n, sierp::splitmix64& rng) {
  sierp::bitvec bits(1ull << n);
  for (std::uint64_t i = 0; i < bits.size(); ++i)
    bits.set(i, rng.coin());
  return sierp::truth_table(n, std::move(bits));
}

inline sierp::quaternary_function random_q4(std::uint32_t n, sierp::splitmix64& rng) {
  std::vector<std::uint8_t> vals(1ull << (2 * n));
  for (auto& v : vals)
    v = static_cast<std::uint8_t>(rng.below(4));
  return sierp::quaternary_function(n, std::move(vals));
}

} // namespace oracles
