/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include <cstdint>

namespace sierp {

// splitmix64; self-contained so seeded runs replay identically on any platform.
class splitmix64 {
public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // bound > 0; modulo bias is irrelevant for search heuristics.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  bool coin() { return next() & 1ull; }

private:
  std::uint64_t state_;
};

} // namespace sierp
