/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file render.hpp
  \brief Deterministic text and SVG renderings.

  Gaskets draw on the triangular grid of grid_position: row i+j, one row
  per level, vertices where the i and j bits are disjoint and holes
  elsewhere. Marked vertices (the current ESOP terms) are filled. XOR
  triangles draw one row per level, base first.
*/

#pragma once

#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "sierp/errors.hpp"
#include "sierp/gasket.hpp"
#include "sierp/xor_triangle.hpp"

namespace sierp {

enum class render_format { text, svg };

inline constexpr std::uint32_t max_render_vars = 6;

namespace detail {

inline std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

struct svg_doc {
  std::string body;
  double width = 0, height = 0;

  void circle(double cx, double cy, double r, bool filled, const char* cls) {
    body += "  <circle cx=\"" + fmt1(cx) + "\" cy=\"" + fmt1(cy) + "\" r=\"" + fmt1(r) +
            "\" class=\"" + cls + "\" fill=\"" + (filled ? "#000" : "#fff") +
            "\" stroke=\"#000\"/>\n";
  }

  std::string str() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                      fmt1(width) + "\" height=\"" + fmt1(height) + "\" viewBox=\"0 0 " +
                      fmt1(width) + " " + fmt1(height) + "\">\n";
    out += body;
    out += "</svg>\n";
    return out;
  }
};

} // namespace detail

/*! \brief One row per level, base first: "1 1 0 0" / " 0 1 0" / ... */
inline std::string render_text(const xor_triangle& t) {
  if (t.base_size() > (1ull << max_render_vars))
    throw capacity_error("render_text: triangle too wide for a text layout");
  std::string out;
  for (std::size_t k = 0; k < t.num_levels(); ++k) {
    out.append(k, ' ');
    const bitvec& level = t.level(k);
    for (std::size_t j = 0; j < level.size(); ++j) {
      if (j)
        out += ' ';
      out += level.get(j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

inline std::string render_svg(const xor_triangle& t) {
  if (t.base_size() > (1ull << max_render_vars))
    throw capacity_error("render_svg: triangle too wide for a layout");
  const double cell = 24.0, r = 8.0, margin = 20.0;
  const std::size_t base = t.base_size();
  detail::svg_doc doc;
  doc.width = 2 * margin + cell * static_cast<double>(base - 1) + 2 * r;
  doc.height = 2 * margin + cell * 0.866 * static_cast<double>(base - 1) + 2 * r;
  // base at the bottom, top element at the apex
  for (std::size_t k = 0; k < t.num_levels(); ++k) {
    const bitvec& level = t.level(k);
    const double y = margin + r + cell * 0.866 * static_cast<double>(base - 1 - k);
    for (std::size_t j = 0; j < level.size(); ++j) {
      const double x = margin + r + cell * (static_cast<double>(j) + static_cast<double>(k) / 2.0);
      doc.circle(x, y, r, level.get(j), level.get(j) ? "one" : "zero");
    }
  }
  return doc.str();
}

/*! \brief Triangular grid; '.' hole, 0/1 spectrum value, '#' marked vertex. */
inline std::string render_text(const gasket& g) {
  if (g.num_vars() > max_render_vars)
    throw capacity_error("render_text: gasket layout capped at 6 variables");
  const std::uint64_t rows = 1ull << g.num_vars();
  std::vector<std::string> grid(rows);
  for (std::uint64_t r = 0; r < rows; ++r)
    grid[r] = std::string(r + 1, '.');
  coordinate c(g.num_vars());
  do {
    const auto [row, col] = grid_position(c);
    grid[row][col] = g.marking().count(c) ? '#' : (g.cell(c) ? '1' : '0');
  } while (next_coordinate(c));
  std::string out;
  for (std::uint64_t r = 0; r < rows; ++r) {
    out.append(rows - 1 - r, ' ');
    for (std::uint64_t j = 0; j <= r; ++j) {
      if (j)
        out += ' ';
      out += grid[r][j];
    }
    out += '\n';
  }
  return out;
}

inline std::string render_svg(const gasket& g) {
  if (g.num_vars() > max_render_vars)
    throw capacity_error("render_svg: gasket layout capped at 6 variables");
  const std::uint64_t rows = 1ull << g.num_vars();
  const double cell = 24.0, r = 7.0, margin = 20.0;
  detail::svg_doc doc;
  doc.width = 2 * margin + cell * static_cast<double>(rows - 1) + 2 * r;
  doc.height = 2 * margin + cell * 0.866 * static_cast<double>(rows - 1) + 2 * r;
  coordinate c(g.num_vars());
  do {
    const auto [row, col] = grid_position(c);
    const double x =
        margin + r + cell * (static_cast<double>(col) + static_cast<double>(rows - 1 - row) / 2.0);
    const double y = margin + r + cell * 0.866 * static_cast<double>(row);
    const bool marked = g.marking().count(c) != 0;
    doc.circle(x, y, marked ? r + 2.0 : r, marked, marked ? "marked" : (g.cell(c) ? "one" : "zero"));
  } while (next_coordinate(c));
  return doc.str();
}

} // namespace sierp
