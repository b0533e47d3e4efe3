/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file gf4.hpp
  \brief GF(4) arithmetic and fixed-polarity spectra of 4-valued functions.

  The field is GF(2)[x]/(x^2+x+1) with 2 encoding x and 3 encoding x+1;
  addition is 2-bit XOR and the nonzero elements form the cyclic group of
  order 3. The shifted literal of shift s is x + s, so each variable has
  four literals, and every function of one variable is a polynomial
  c0 + c1*(x+s) + c2*(x+s)^2 + c3*(x+s)^3 for any fixed shift s.
*/

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sierp/errors.hpp"

namespace sierp {

inline constexpr std::array<std::array<std::uint8_t, 4>, 4> gf4_mul_table = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};

inline constexpr std::uint8_t gf4_add(std::uint8_t a, std::uint8_t b) { return a ^ b; }

inline constexpr std::uint8_t gf4_mul(std::uint8_t a, std::uint8_t b) {
  return gf4_mul_table[a][b];
}

// p in 0..3; power 0 is 1 for every base, including 0 (an absent factor).
inline constexpr std::uint8_t gf4_pow(std::uint8_t a, std::uint8_t p) {
  std::uint8_t r = 1;
  for (std::uint8_t i = 0; i < p; ++i)
    r = gf4_mul(r, a);
  return r;
}

/*! \brief Literal (x + shift)^power; power 0 denotes an absent factor. */
struct gf4_literal {
  std::uint8_t shift = 0;
  std::uint8_t power = 0;

  std::uint8_t eval(std::uint8_t x) const { return gf4_pow(gf4_add(x, shift), power); }

  auto operator<=>(const gf4_literal&) const = default;
};

/*! \brief Dense 4-valued function; index is sum of X_i * 4^(n-i). */
class quaternary_function {
public:
  quaternary_function(std::uint32_t n, std::vector<std::uint8_t> values)
      : n_(n), values_(std::move(values)) {
    if (n_ > 12)
      throw capacity_error("quaternary_function: dense form capped at 12 variables");
    if (values_.size() != (1ull << (2 * n_)))
      throw std::invalid_argument("quaternary_function: value vector must have 4^n entries");
    for (auto v : values_)
      if (v > 3)
        throw std::invalid_argument("quaternary_function: values must be in 0..3");
  }

  static quaternary_function constant(std::uint32_t n, std::uint8_t v) {
    return quaternary_function(n, std::vector<std::uint8_t>(1ull << (2 * n), v));
  }

  std::uint32_t num_vars() const { return n_; }
  std::uint64_t num_points() const { return 1ull << (2 * n_); }
  const std::vector<std::uint8_t>& values() const { return values_; }

  std::uint8_t value(std::uint64_t index) const { return values_[index]; }

  std::uint8_t value(const std::vector<std::uint8_t>& point) const {
    if (point.size() != n_)
      throw std::invalid_argument("quaternary_function: point arity mismatch");
    std::uint64_t idx = 0;
    for (auto x : point)
      idx = idx * 4 + x;
    return values_[idx];
  }

  quaternary_function cofactor(std::uint32_t var, std::uint8_t v) const {
    if (var < 1 || var > n_)
      throw std::invalid_argument("quaternary_function: cofactor variable out of range");
    const std::uint32_t nm = n_ - 1;
    const std::uint32_t low_digits = n_ - var;
    const std::uint64_t low_div = 1ull << (2 * low_digits);
    std::vector<std::uint8_t> out(1ull << (2 * nm));
    for (std::uint64_t i = 0; i < out.size(); ++i) {
      const std::uint64_t hi = i / low_div;
      const std::uint64_t lo = i % low_div;
      out[i] = values_[(hi * 4 + v) * low_div + lo];
    }
    return quaternary_function(nm, std::move(out));
  }

  bool operator==(const quaternary_function&) const = default;

private:
  std::uint32_t n_;
  std::vector<std::uint8_t> values_;
};

enum class expansion_kind4 { shannon, davio0, davio1, davio2, davio3 };

inline const char* to_string(expansion_kind4 k) {
  switch (k) {
  case expansion_kind4::shannon: return "4-S";
  case expansion_kind4::davio0: return "4-pD";
  case expansion_kind4::davio1: return "1-4-nD";
  case expansion_kind4::davio2: return "2-4-nD";
  default: return "3-4-nD";
  }
}

namespace detail {

/*!
  Coefficients of g over the shifted power basis: with y = x + s,
  g = c0 + c1*y + c2*y^2 + c3*y^3 where
    c0 = g(s), c1 = sum_{v != s} (v+s)^2 g(v),
    c2 = sum_{v != s} (v+s) g(v), c3 = sum_v g(v).
  This is the closed form of the shift-s Davio rows.
*/
inline std::array<std::uint8_t, 4> davio_coeffs(const std::array<std::uint8_t, 4>& g,
                                                std::uint8_t shift) {
  std::array<std::uint8_t, 4> c{0, 0, 0, 0};
  c[0] = g[shift];
  for (std::uint8_t v = 0; v < 4; ++v) {
    c[3] = gf4_add(c[3], g[v]);
    if (v == shift)
      continue;
    const std::uint8_t w = gf4_add(v, shift);
    c[1] = gf4_add(c[1], gf4_mul(gf4_mul(w, w), g[v]));
    c[2] = gf4_add(c[2], gf4_mul(w, g[v]));
  }
  return c;
}

} // namespace detail

/*!
  \brief The four coefficient subfunctions of an expansion at one variable.

  Shannon returns the cofactors themselves (selected by the indicator
  literals J_v); the Davio kind with shift s returns the coefficients of
  the powers of (x + s). Recombining with the kind's literal pattern
  reproduces the function pointwise.
*/
inline std::array<quaternary_function, 4> expand(const quaternary_function& f, std::uint32_t var,
                                                 expansion_kind4 kind) {
  std::array<quaternary_function, 4> cof = {f.cofactor(var, 0), f.cofactor(var, 1),
                                            f.cofactor(var, 2), f.cofactor(var, 3)};
  if (kind == expansion_kind4::shannon)
    return cof;
  const std::uint8_t shift = kind == expansion_kind4::davio0   ? 0
                             : kind == expansion_kind4::davio1 ? 1
                             : kind == expansion_kind4::davio2 ? 2
                                                               : 3;
  const std::uint64_t points = cof[0].num_points();
  std::array<std::vector<std::uint8_t>, 4> out;
  for (auto& o : out)
    o.resize(points);
  for (std::uint64_t p = 0; p < points; ++p) {
    const std::array<std::uint8_t, 4> g = {cof[0].value(p), cof[1].value(p), cof[2].value(p),
                                           cof[3].value(p)};
    const auto c = detail::davio_coeffs(g, shift);
    for (int k = 0; k < 4; ++k)
      out[k][p] = c[k];
  }
  const std::uint32_t nm = cof[0].num_vars();
  return {quaternary_function(nm, std::move(out[0])), quaternary_function(nm, std::move(out[1])),
          quaternary_function(nm, std::move(out[2])), quaternary_function(nm, std::move(out[3]))};
}

inline constexpr std::uint32_t max_spectrum_vars4 = 8;

/*!
  \brief Fixed-polarity spectrum: 4^n coefficients indexed like the function.

  polarity[i] is the shift of variable i+1. The reconstruction identity is
  f(X) = sum_k c_k * prod_i (X_i + shift_i)^(k_i) with k_i the base-4
  digits of the coefficient index.
*/
inline std::vector<std::uint8_t> gf4_spectrum(const quaternary_function& f,
                                              const std::vector<std::uint8_t>& polarity) {
  const std::uint32_t n = f.num_vars();
  if (n > max_spectrum_vars4)
    throw capacity_error("gf4_spectrum: capped at 8 variables");
  if (polarity.size() != n)
    throw std::invalid_argument("gf4_spectrum: polarity arity mismatch");
  std::vector<std::uint8_t> a = f.values();
  for (std::uint32_t var = 1; var <= n; ++var) {
    const std::uint64_t stride = 1ull << (2 * (n - var));
    const std::uint8_t shift = polarity[var - 1];
    if (shift > 3)
      throw std::invalid_argument("gf4_spectrum: shifts must be in 0..3");
    for (std::uint64_t base = 0; base < a.size(); base += 4 * stride)
      for (std::uint64_t k = 0; k < stride; ++k) {
        const std::array<std::uint8_t, 4> g = {a[base + k], a[base + stride + k],
                                               a[base + 2 * stride + k], a[base + 3 * stride + k]};
        const auto c = detail::davio_coeffs(g, shift);
        a[base + k] = c[0];
        a[base + stride + k] = c[1];
        a[base + 2 * stride + k] = c[2];
        a[base + 3 * stride + k] = c[3];
      }
  }
  return a;
}

/*! \brief Evaluate the reconstruction identity; inverse of gf4_spectrum. */
inline quaternary_function gf4_reconstruct(std::uint32_t n, const std::vector<std::uint8_t>& coeffs,
                                           const std::vector<std::uint8_t>& polarity) {
  if (coeffs.size() != (1ull << (2 * n)))
    throw std::invalid_argument("gf4_reconstruct: coefficient vector must have 4^n entries");
  std::vector<std::uint8_t> values(coeffs.size(), 0);
  for (std::uint64_t idx = 0; idx < values.size(); ++idx) {
    std::uint8_t acc = 0;
    for (std::uint64_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0)
        continue;
      std::uint8_t prod = coeffs[k];
      for (std::uint32_t var = 1; var <= n && prod; ++var) {
        const std::uint32_t sh = 2 * (n - var);
        const std::uint8_t x = (idx >> sh) & 3u;
        const std::uint8_t p = (k >> sh) & 3u;
        prod = gf4_mul(prod, gf4_pow(gf4_add(x, polarity[var - 1]), p));
      }
      acc = gf4_add(acc, prod);
    }
    values[idx] = acc;
  }
  return quaternary_function(n, std::move(values));
}

} // namespace sierp
