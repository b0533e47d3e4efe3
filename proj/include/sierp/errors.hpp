/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sierp {

/*! \brief Raised when an input file or stream violates a text format. */
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::uint64_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::uint64_t line() const { return line_; }

private:
  std::uint64_t line_;
};

/*! \brief Raised when a dense representation would exceed its size cap. */
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace sierp
