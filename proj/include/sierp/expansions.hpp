/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file expansions.hpp
  \brief Shannon and Davio decompositions of a Boolean function.

  Writing f0 = f|x=0, f1 = f|x=1 and fd = f0 ^ f1, the generic expansion
  f = C0*~x*f0 ^ C1*x*f1 ^ Cd*fd keeps exactly two of the three
  subfunctions: Shannon [110], positive Davio [011], negative Davio [101].
*/

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "sierp/truth_table.hpp"

namespace sierp {

enum class expansion_kind { shannon, positive_davio, negative_davio };

inline const char* to_string(expansion_kind k) {
  switch (k) {
  case expansion_kind::shannon: return "S";
  case expansion_kind::positive_davio: return "pD";
  default: return "nD";
  }
}

/*! \brief Coefficient vector [C0 C1 Cd]; exactly one entry is zero. */
inline std::array<std::uint8_t, 3> expansion_coefficients(expansion_kind k) {
  switch (k) {
  case expansion_kind::shannon: return {1, 1, 0};
  case expansion_kind::positive_davio: return {0, 1, 1};
  default: return {1, 0, 1};
  }
}

struct boolean_expansion {
  expansion_kind kind;
  std::uint32_t var; // 1-based
  truth_table first;
  truth_table second;
  // S:  f = ~x*first ^ x*second     (first = f0, second = f1)
  // pD: f = first ^ x*second        (first = f0, second = fd)
  // nD: f = first ^ ~x*second       (first = f1, second = fd)
};

inline boolean_expansion expand(const truth_table& tt, std::uint32_t var, expansion_kind kind) {
  truth_table f0 = tt.cofactor(var, false);
  truth_table f1 = tt.cofactor(var, true);
  switch (kind) {
  case expansion_kind::shannon:
    return {kind, var, std::move(f0), std::move(f1)};
  case expansion_kind::positive_davio: {
    truth_table fd = f0;
    fd.xor_with(f1);
    return {kind, var, std::move(f0), std::move(fd)};
  }
  default: {
    truth_table fd = f0;
    fd.xor_with(f1);
    return {kind, var, std::move(f1), std::move(fd)};
  }
  }
}

/*! \brief Rebuild the n-variable function; inverse of expand. */
inline truth_table recombine(const boolean_expansion& e) {
  const std::uint32_t nm = e.first.num_vars();
  const std::uint32_t n = nm + 1;
  const std::uint32_t low_bits = n - e.var;
  bitvec out(1ull << n);
  const std::uint64_t low_mask = (1ull << low_bits) - 1ull;
  for (std::uint64_t idx = 0; idx < (1ull << n); ++idx) {
    const bool x = (idx >> low_bits) & 1ull;
    const std::uint64_t red = ((idx >> (low_bits + 1)) << low_bits) | (idx & low_mask);
    bool v = false;
    switch (e.kind) {
    case expansion_kind::shannon:
      v = x ? e.second.value(red) : e.first.value(red);
      break;
    case expansion_kind::positive_davio:
      v = e.first.value(red) ^ (x && e.second.value(red));
      break;
    default:
      v = e.first.value(red) ^ (!x && e.second.value(red));
      break;
    }
    out.set(idx, v);
  }
  return truth_table(n, std::move(out));
}

} // namespace sierp
