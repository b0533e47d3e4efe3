/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file term.hpp
  \brief Product terms / gasket coordinates.

  Every variable of a term is in one of three states, encoded as
  1 = absent, 2 = complemented, 3 = plain. The codes are chosen so the
  three states of a variable XOR to zero (1 ^ 2 ^ 3 == 0), which makes the
  algebra of the rewrite rules a single XOR: merging two states yields the
  third one. A product term and a gasket coordinate are the same object.
*/

#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sierp/truth_table.hpp"

namespace sierp {

inline constexpr std::uint8_t digit_absent = 1;
inline constexpr std::uint8_t digit_negative = 2;
inline constexpr std::uint8_t digit_positive = 3;

/*! \brief The remaining state of a variable given two distinct ones. */
inline std::uint8_t third_digit(std::uint8_t a, std::uint8_t b) {
  assert(a >= 1 && a <= 3 && b >= 1 && b <= 3 && a != b);
  return a ^ b;
}

class term {
public:
  term() = default;
  explicit term(std::uint32_t n) : digits_(n, digit_absent) {}
  term(std::initializer_list<std::uint8_t> digits) : digits_(digits) { validate(); }
  explicit term(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) { validate(); }

  // '-' absent, '0' complemented, '1' plain; e.g. "-00" is ~x2 ~x3 for n=3.
  static term from_cube(std::string_view cube) {
    term t(static_cast<std::uint32_t>(cube.size()));
    for (std::size_t i = 0; i < cube.size(); ++i) {
      switch (cube[i]) {
      case '-': t.digits_[i] = digit_absent; break;
      case '0': t.digits_[i] = digit_negative; break;
      case '1': t.digits_[i] = digit_positive; break;
      default: throw std::invalid_argument("term: expected '-', '0' or '1'");
      }
    }
    return t;
  }

  static term from_minterm(const assignment& a) {
    term t(static_cast<std::uint32_t>(a.bits.size()));
    for (std::size_t i = 0; i < a.bits.size(); ++i)
      t.digits_[i] = a.bits[i] ? digit_positive : digit_negative;
    return t;
  }

  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(digits_.size()); }

  std::uint8_t digit(std::uint32_t var) const { // var is 1-based
    assert(var >= 1 && var <= digits_.size());
    return digits_[var - 1];
  }

  void set_digit(std::uint32_t var, std::uint8_t d) {
    assert(var >= 1 && var <= digits_.size());
    assert(d >= 1 && d <= 3);
    digits_[var - 1] = d;
  }

  const std::vector<std::uint8_t>& digits() const { return digits_; }

  std::uint32_t literal_count() const {
    std::uint32_t c = 0;
    for (auto d : digits_)
      c += (d != digit_absent);
    return c;
  }

  bool is_constant_one() const { return literal_count() == 0; }

  bool evaluates(const assignment& a) const {
    assert(a.bits.size() == digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i] == digit_negative && a.bits[i])
        return false;
      if (digits_[i] == digit_positive && !a.bits[i])
        return false;
    }
    return true;
  }

  std::string cube_string() const {
    std::string s(digits_.size(), '-');
    for (std::size_t i = 0; i < digits_.size(); ++i)
      s[i] = digits_[i] == digit_absent ? '-' : (digits_[i] == digit_negative ? '0' : '1');
    return s;
  }

  // report syntax: "(1,2,3)"
  std::string coordinate_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (i)
        s += ',';
      s += char('0' + digits_[i]);
    }
    return s + ")";
  }

  auto operator<=>(const term&) const = default; // lexicographic on digit codes

private:
  void validate() const {
    for (auto d : digits_)
      if (d < 1 || d > 3)
        throw std::invalid_argument("term: digit codes must be 1, 2 or 3");
  }

  std::vector<std::uint8_t> digits_;
};

// A gasket coordinate is a term viewed as an address.
using coordinate = term;

/*! \brief Number of variables whose state differs. */
inline std::uint32_t distance(const term& a, const term& b) {
  assert(a.num_vars() == b.num_vars());
  std::uint32_t d = 0;
  for (std::uint32_t i = 0; i < a.num_vars(); ++i)
    d += (a.digits()[i] != b.digits()[i]);
  return d;
}

} // namespace sierp
