/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file pla.hpp
  \brief Espresso-format PLA ingestion and emission.

  Supported subset: `.i`, `.o`, `.p`, `.type {f|fd|fr}`, `.ilb`, `.ob`,
  `.e`/`.end`, `#` comments, cube lines with an input plane over {0,1,-}
  and an output plane over {0,1,-,~} separated by whitespace.
*/

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sierp/errors.hpp"
#include "sierp/truth_table.hpp"

namespace sierp {

enum class pla_type { f, fd, fr };

inline const char* to_string(pla_type t) {
  switch (t) {
  case pla_type::f: return "f";
  case pla_type::fd: return "fd";
  default: return "fr";
  }
}

struct pla_cube {
  std::string in;  // over {0,1,-}
  std::string out; // over {0,1,-,~}
  bool operator==(const pla_cube&) const = default;
};

struct logic_spec {
  std::uint32_t n_inputs = 0;
  std::uint32_t n_outputs = 0;
  std::vector<pla_cube> cubes;
  pla_type type = pla_type::fd; // espresso default when .type is absent
  std::string name;
  std::vector<std::string> in_labels;
  std::vector<std::string> out_labels;
  std::vector<std::string> warnings; // unknown directives etc.

  bool operator==(const logic_spec& o) const {
    return n_inputs == o.n_inputs && n_outputs == o.n_outputs && cubes == o.cubes &&
           type == o.type && in_labels == o.in_labels && out_labels == o.out_labels;
  }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string tok; is >> tok;)
    out.push_back(tok);
  return out;
}

// Two input cubes intersect unless some variable is fixed to opposite values.
inline bool cubes_intersect(const std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == '0' && b[i] == '1') || (a[i] == '1' && b[i] == '0'))
      return false;
  }
  return true;
}

} // namespace detail

inline logic_spec parse_pla(std::istream& is) {
  logic_spec spec;
  bool saw_i = false, saw_o = false, done = false;
  std::optional<std::uint64_t> declared_cubes;
  std::uint64_t line_no = 0;

  std::string raw;
  while (!done && std::getline(is, raw)) {
    ++line_no;
    if (auto pos = raw.find('#'); pos != std::string::npos)
      raw.erase(pos);
    auto tokens = detail::split_ws(raw);
    if (tokens.empty())
      continue;

    if (tokens[0][0] == '.') {
      const std::string& dir = tokens[0];
      auto want_int = [&](const char* what) -> std::uint64_t {
        if (tokens.size() < 2)
          throw parse_error(std::string(what) + " expects a number", line_no);
        try {
          return std::stoull(tokens[1]);
        } catch (const std::exception&) {
          throw parse_error(std::string(what) + " expects a number", line_no);
        }
      };
      if (dir == ".i") {
        const auto v = want_int(".i");
        if (v == 0)
          throw parse_error(".i must be positive", line_no);
        spec.n_inputs = static_cast<std::uint32_t>(v);
        saw_i = true;
      } else if (dir == ".o") {
        const auto v = want_int(".o");
        if (v == 0)
          throw parse_error(".o must be positive", line_no);
        spec.n_outputs = static_cast<std::uint32_t>(v);
        saw_o = true;
      } else if (dir == ".p") {
        declared_cubes = want_int(".p");
      } else if (dir == ".type") {
        if (tokens.size() < 2)
          throw parse_error(".type expects f, fd or fr", line_no);
        if (tokens[1] == "f")
          spec.type = pla_type::f;
        else if (tokens[1] == "fd")
          spec.type = pla_type::fd;
        else if (tokens[1] == "fr")
          spec.type = pla_type::fr;
        else
          throw parse_error("unsupported .type '" + tokens[1] + "'", line_no);
      } else if (dir == ".ilb") {
        spec.in_labels.assign(tokens.begin() + 1, tokens.end());
      } else if (dir == ".ob") {
        spec.out_labels.assign(tokens.begin() + 1, tokens.end());
      } else if (dir == ".e" || dir == ".end") {
        done = true;
      } else {
        spec.warnings.push_back("line " + std::to_string(line_no) + ": ignoring unknown directive '" + dir + "'");
      }
      continue;
    }

    // cube line
    if (!saw_i || !saw_o)
      throw parse_error("cube line before .i/.o declarations", line_no);
    if (tokens.size() != 2)
      throw parse_error("cube line must have an input plane and an output plane", line_no);
    const std::string& in = tokens[0];
    const std::string& out = tokens[1];
    if (in.size() != spec.n_inputs)
      throw parse_error("input plane has " + std::to_string(in.size()) + " characters, expected " +
                            std::to_string(spec.n_inputs),
                        line_no);
    if (out.size() != spec.n_outputs)
      throw parse_error("output plane has " + std::to_string(out.size()) + " characters, expected " +
                            std::to_string(spec.n_outputs),
                        line_no);
    for (char c : in)
      if (c != '0' && c != '1' && c != '-')
        throw parse_error(std::string("invalid input character '") + c + "'", line_no);
    for (char c : out)
      if (c != '0' && c != '1' && c != '-' && c != '~')
        throw parse_error(std::string("invalid output character '") + c + "'", line_no);
    spec.cubes.push_back({in, out});
  }

  if (!saw_i || !saw_o)
    throw parse_error("missing .i/.o declaration", line_no);
  if (declared_cubes && *declared_cubes != spec.cubes.size())
    throw parse_error(".p declares " + std::to_string(*declared_cubes) + " cubes but " +
                          std::to_string(spec.cubes.size()) + " were given",
                      line_no);

  // For fr inputs the asserted ON and OFF sets must not overlap.
  if (spec.type == pla_type::fr) {
    for (std::uint32_t o = 0; o < spec.n_outputs; ++o) {
      for (std::size_t a = 0; a < spec.cubes.size(); ++a) {
        if (spec.cubes[a].out[o] != '1')
          continue;
        for (std::size_t b = 0; b < spec.cubes.size(); ++b) {
          if (spec.cubes[b].out[o] != '0')
            continue;
          if (detail::cubes_intersect(spec.cubes[a].in, spec.cubes[b].in))
            throw parse_error("output " + std::to_string(o) + ": ON and OFF sets overlap (cubes " +
                              std::to_string(a + 1) + " and " + std::to_string(b + 1) + ")");
        }
      }
    }
  }
  return spec;
}

inline logic_spec parse_pla(const std::string& text) {
  std::istringstream is(text);
  return parse_pla(is);
}

inline void emit_pla(const logic_spec& spec, std::ostream& os) {
  os << ".i " << spec.n_inputs << "\n";
  os << ".o " << spec.n_outputs << "\n";
  if (!spec.in_labels.empty()) {
    os << ".ilb";
    for (const auto& l : spec.in_labels)
      os << ' ' << l;
    os << "\n";
  }
  if (!spec.out_labels.empty()) {
    os << ".ob";
    for (const auto& l : spec.out_labels)
      os << ' ' << l;
    os << "\n";
  }
  os << ".p " << spec.cubes.size() << "\n";
  os << ".type " << to_string(spec.type) << "\n";
  for (const auto& c : spec.cubes)
    os << c.in << ' ' << c.out << "\n";
  os << ".e\n";
}

inline std::string emit_pla(const logic_spec& spec) {
  std::ostringstream os;
  emit_pla(spec, os);
  return os.str();
}

/*! \brief Dense ON-set of one output; don't-care outputs contribute nothing. */
inline truth_table to_truth_table(const logic_spec& spec, std::uint32_t output_index) {
  if (spec.n_inputs > max_dense_vars)
    throw capacity_error("to_truth_table: " + std::to_string(spec.n_inputs) +
                         " inputs exceed the dense cap of 24; use the cube-level paths");
  if (output_index >= spec.n_outputs)
    throw std::invalid_argument("to_truth_table: output index out of range");
  const std::uint32_t n = spec.n_inputs;
  bitvec on(1ull << n);
  for (const auto& cube : spec.cubes) {
    if (cube.out[output_index] != '1')
      continue;
    std::uint64_t fixed = 0, dash = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint64_t bit = 1ull << (n - 1 - i);
      if (cube.in[i] == '1')
        fixed |= bit;
      else if (cube.in[i] == '-')
        dash |= bit;
    }
    std::uint64_t sub = dash;
    while (true) {
      on.set(fixed | sub, true);
      if (sub == 0)
        break;
      sub = (sub - 1) & dash;
    }
  }
  return truth_table(n, std::move(on));
}

} // namespace sierp
