/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file xor_triangle.hpp
  \brief Pascal-triangle-mod-2 construction over a truth vector.

  Level 0 is the truth vector; each higher level XORs adjacent pairs and
  is one element shorter, down to a single top element. The left side,
  read base to top, lists the fixed-polarity Reed-Muller coefficients for
  the all-plain polarity in subset-code order; the right side lists the
  coefficients for the all-complemented polarity.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sierp/bitvec.hpp"
#include "sierp/errors.hpp"

namespace sierp {

// Base vectors above this length would need gigabytes of cells.
inline constexpr std::size_t max_triangle_base = 1ull << 12;

class xor_triangle {
public:
  explicit xor_triangle(bitvec base) {
    const std::size_t len = base.size();
    if (len == 0 || (len & (len - 1)) != 0)
      throw std::invalid_argument("xor_triangle: base length must be a power of two");
    if (len > max_triangle_base)
      throw capacity_error("xor_triangle: base longer than 2^12; use the transform path instead");
    levels_.push_back(std::move(base));
    while (levels_.back().size() > 1) {
      const bitvec& prev = levels_.back();
      bitvec next(prev.size() - 1);
      for (std::size_t j = 0; j + 1 < prev.size(); ++j)
        next.set(j, prev.get(j) ^ prev.get(j + 1));
      levels_.push_back(std::move(next));
    }
  }

  std::size_t num_levels() const { return levels_.size(); }
  const bitvec& level(std::size_t k) const { return levels_.at(k); }
  std::size_t base_size() const { return levels_.front().size(); }

  std::uint64_t total_cells() const {
    const std::uint64_t b = levels_.front().size();
    return b * (b + 1) / 2;
  }

private:
  std::vector<bitvec> levels_;
};

inline xor_triangle build_xor_triangle(bitvec base) { return xor_triangle(std::move(base)); }

/*! \brief (left, right) border cells of every level, base to top. */
inline std::pair<bitvec, bitvec> triangle_sides(const xor_triangle& t) {
  const std::size_t levels = t.num_levels();
  bitvec left(levels), right(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    left.set(k, t.level(k).get(0));
    right.set(k, t.level(k).get(t.level(k).size() - 1));
  }
  return {left, right};
}

} // namespace sierp
