/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file truth_table.hpp
  \brief Dense Boolean functions over up to 24 variables.

  Index convention: the assignment (b1, ..., bn) maps to the index
  sum of b_i * 2^(n-i), i.e. x1 is the most significant bit of the
  index and position 0 of the value vector holds f(0, ..., 0).
*/

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sierp/bitvec.hpp"
#include "sierp/errors.hpp"

namespace sierp {

inline constexpr std::uint32_t max_dense_vars = 24;

/*! \brief Point of the Boolean cube; bits[0] is x1. */
struct assignment {
  std::vector<std::uint8_t> bits;

  static assignment from_index(std::uint32_t n, std::uint64_t index) {
    assignment a;
    a.bits.resize(n);
    for (std::uint32_t i = 0; i < n; ++i)
      a.bits[i] = (index >> (n - 1 - i)) & 1u;
    return a;
  }

  std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (auto b : bits)
      idx = (idx << 1) | (b & 1u);
    return idx;
  }

  bool operator==(const assignment&) const = default;
};

class truth_table {
public:
  truth_table(std::uint32_t n, bitvec values) : n_(n), values_(std::move(values)) {
    check_vars(n_);
    if (values_.size() != (1ull << n_))
      throw std::invalid_argument("truth_table: value vector must have 2^n bits");
  }

  static truth_table constant(std::uint32_t n, bool v) {
    check_vars(n);
    return truth_table(n, bitvec(1ull << n, v));
  }

  // "10001111" etc., leftmost character is f(0,...,0).
  static truth_table from_bits(std::string_view bits) {
    std::uint32_t n = 0;
    while ((1ull << n) < bits.size())
      ++n;
    if ((1ull << n) != bits.size())
      throw std::invalid_argument("truth_table: bit string length must be a power of two");
    return truth_table(n, bitvec::from_string(bits));
  }

  std::uint32_t num_vars() const { return n_; }
  std::uint64_t num_points() const { return 1ull << n_; }
  const bitvec& bits() const { return values_; }

  bool value(std::uint64_t index) const { return values_.get(index); }
  bool value(const assignment& a) const {
    if (a.bits.size() != n_)
      throw std::invalid_argument("truth_table: assignment arity mismatch");
    return values_.get(a.index());
  }

  /*! \brief The (n-1)-variable function with x_var fixed; var is 1-based. */
  truth_table cofactor(std::uint32_t var, bool val) const {
    if (var < 1 || var > n_)
      throw std::invalid_argument("truth_table: cofactor variable out of range");
    const std::uint32_t nm = n_ - 1;
    const std::uint32_t low_bits = n_ - var; // index bits below the removed one
    bitvec out(1ull << nm);
    const std::uint64_t low_mask = (1ull << low_bits) - 1ull;
    for (std::uint64_t i = 0; i < (1ull << nm); ++i) {
      const std::uint64_t hi = i >> low_bits;
      const std::uint64_t lo = i & low_mask;
      const std::uint64_t src = (hi << (low_bits + 1)) | (static_cast<std::uint64_t>(val) << low_bits) | lo;
      out.set(i, values_.get(src));
    }
    return truth_table(nm, std::move(out));
  }

  void xor_with(const truth_table& o) {
    if (o.n_ != n_)
      throw std::invalid_argument("truth_table: arity mismatch");
    values_.xor_with(o.values_);
  }

  bool operator==(const truth_table&) const = default;

private:
  // n = 0 (a bare constant) is allowed: cofactors bottom out there.
  static void check_vars(std::uint32_t n) {
    if (n > max_dense_vars)
      throw capacity_error("truth_table: dense form capped at 24 variables; use the cube-level paths");
  }

  std::uint32_t n_;
  bitvec values_;
};

} // namespace sierp
