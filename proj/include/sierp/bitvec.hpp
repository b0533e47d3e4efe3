/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sierp {

/*! \brief Fixed-length packed bit container. */
class bitvec {
public:
  bitvec() = default;

  explicit bitvec(std::size_t n, bool fill = false)
      : size_(n), words_(word_count(n), fill ? ~0ull : 0ull) {
    trim();
  }

  // Characters '0'/'1', index 0 first.
  static bitvec from_string(std::string_view s) {
    bitvec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        v.set(i, true);
      else if (s[i] != '0')
        throw std::invalid_argument("bitvec: expected '0' or '1'");
    }
    return v;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1ull;
  }

  void set(std::size_t i, bool v) {
    assert(i < size_);
    const std::uint64_t mask = 1ull << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] ^= 1ull << (i & 63);
  }

  void xor_with(const bitvec& o) {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] ^= o.words_[w];
  }

  bitvec slice(std::size_t start, std::size_t len) const {
    assert(start + len <= size_);
    bitvec out(len);
    for (std::size_t i = 0; i < len; ++i)
      out.set(i, get(start + i));
    return out;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w)
        return true;
    return false;
  }

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i))
        s[i] = '1';
    return s;
  }

  bool operator==(const bitvec&) const = default;

private:
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

  void trim() {
    if (size_ & 63)
      words_.back() &= (1ull << (size_ & 63)) - 1ull;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace sierp
