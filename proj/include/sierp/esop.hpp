/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file esop.hpp
  \brief Exclusive sums of products as normalized term multisets.

  Terms are kept sorted and duplicate-free: a term XORed with itself is
  the zero function, so equal pairs cancel eagerly. All rewrites go
  through the triangle rule 1 ^ 2 ^ 3 = 0 on digit codes: a distance-1
  pair merges into the single term carrying the third digit, a term splits
  into the two terms with the other two digits, and a distance-2 pair can
  be reshaped into another pair of the same size.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sierp/errors.hpp"
#include "sierp/pla.hpp"
#include "sierp/reed_muller.hpp"
#include "sierp/term.hpp"
#include "sierp/truth_table.hpp"

namespace sierp {

struct cost_report {
  std::uint64_t term_count = 0;
  std::uint64_t literal_count = 0;
  auto operator<=>(const cost_report&) const = default; // (terms, literals) lexicographic
};

class esop {
public:
  explicit esop(std::uint32_t n) : n_(n) {}

  static esop from_terms(std::uint32_t n, std::vector<term> terms) {
    esop e(n);
    for (auto& t : terms)
      e.add_term(std::move(t));
    return e;
  }

  std::uint32_t num_vars() const { return n_; }
  const std::vector<term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  bool contains(const term& t) const {
    return std::binary_search(terms_.begin(), terms_.end(), t);
  }

  /*! \brief XOR-insert: adding a term twice removes it. */
  void add_term(term t) {
    if (t.num_vars() != n_)
      throw std::invalid_argument("esop: term arity mismatch");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it != terms_.end() && *it == t)
      terms_.erase(it);
    else
      terms_.insert(it, std::move(t));
  }

  void remove_term(const term& t) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it == terms_.end() || *it != t)
      throw std::invalid_argument("esop: term not present");
    terms_.erase(it);
  }

  bool eval(const assignment& a) const {
    if (a.bits.size() != n_)
      throw std::invalid_argument("esop: assignment arity mismatch");
    bool acc = false;
    for (const auto& t : terms_)
      acc ^= t.evaluates(a);
    return acc;
  }

  cost_report cost() const {
    cost_report c;
    c.term_count = terms_.size();
    for (const auto& t : terms_)
      c.literal_count += t.literal_count();
    return c;
  }

  bool operator==(const esop&) const = default;

private:
  std::uint32_t n_;
  std::vector<term> terms_; // sorted, duplicate-free
};

// ---------------------------------------------------------------- polarity

enum class var_polarity : std::uint8_t { plain = 0, complemented = 1, mixed = 2 };

inline char to_char(var_polarity p) {
  return p == var_polarity::plain ? '0' : (p == var_polarity::complemented ? '1' : 'd');
}

/*! \brief Per-variable usage across all terms; unused variables default to plain. */
inline std::vector<var_polarity> polarity_of(const esop& e) {
  std::vector<var_polarity> pol(e.num_vars(), var_polarity::plain);
  std::vector<bool> seen_pos(e.num_vars(), false), seen_neg(e.num_vars(), false);
  for (const auto& t : e.terms())
    for (std::uint32_t var = 1; var <= e.num_vars(); ++var) {
      if (t.digit(var) == digit_positive)
        seen_pos[var - 1] = true;
      else if (t.digit(var) == digit_negative)
        seen_neg[var - 1] = true;
    }
  for (std::uint32_t i = 0; i < e.num_vars(); ++i) {
    if (seen_pos[i] && seen_neg[i])
      pol[i] = var_polarity::mixed;
    else if (seen_neg[i])
      pol[i] = var_polarity::complemented;
    else
      pol[i] = var_polarity::plain;
  }
  return pol;
}

// ---------------------------------------------------------------- rewrites

/*! \brief Replace a distance-1 pair by the term with the third digit. */
inline esop merge_distance1(esop e, const term& t1, const term& t2) {
  const term a = t1, b = t2; // copies: the references may point into e
  if (!e.contains(a) || !e.contains(b))
    throw std::invalid_argument("merge_distance1: terms not present");
  if (distance(a, b) != 1)
    throw std::invalid_argument("merge_distance1: terms must differ in exactly one variable");
  term merged = a;
  for (std::uint32_t var = 1; var <= a.num_vars(); ++var)
    if (a.digit(var) != b.digit(var))
      merged.set_digit(var, third_digit(a.digit(var), b.digit(var)));
  e.remove_term(a);
  e.remove_term(b);
  e.add_term(std::move(merged));
  return e;
}

/*! \brief Replace a term by the two terms with the other digits at var. */
inline esop split_term(esop e, const term& t_ref, std::uint32_t var) {
  const term t = t_ref;
  if (!e.contains(t))
    throw std::invalid_argument("split_term: term not present");
  if (var < 1 || var > t.num_vars())
    throw std::invalid_argument("split_term: variable out of range");
  const std::uint8_t d = t.digit(var);
  term a = t, b = t;
  switch (d) {
  case digit_absent:
    a.set_digit(var, digit_negative);
    b.set_digit(var, digit_positive);
    break;
  case digit_negative:
    a.set_digit(var, digit_absent);
    b.set_digit(var, digit_positive);
    break;
  default:
    a.set_digit(var, digit_absent);
    b.set_digit(var, digit_negative);
    break;
  }
  e.remove_term(t);
  e.add_term(std::move(a));
  e.add_term(std::move(b));
  return e;
}

enum class reshape_alternative { a, b };

/*!
  \brief Cost-neutral rewrite of a distance-2 pair.

  With i < j the differing variables, alternative A keeps t1's digit at i
  and t2's at j, giving {t1 with third(j), t2 with third(i)}; alternative
  B swaps the roles. Both preserve the function: the two cross terms of
  the expansion cancel under XOR.
*/
inline esop reshape_distance2(esop e, const term& t1, const term& t2, reshape_alternative alt) {
  const term x = t1, y = t2; // copies: the references may point into e
  if (!e.contains(x) || !e.contains(y))
    throw std::invalid_argument("reshape_distance2: terms not present");
  if (distance(x, y) != 2)
    throw std::invalid_argument("reshape_distance2: terms must differ in exactly two variables");
  std::uint32_t vi = 0, vj = 0;
  for (std::uint32_t var = 1; var <= x.num_vars(); ++var)
    if (x.digit(var) != y.digit(var)) {
      if (!vi)
        vi = var;
      else
        vj = var;
    }
  term a = x, b = y;
  const std::uint8_t ti = third_digit(x.digit(vi), y.digit(vi));
  const std::uint8_t tj = third_digit(x.digit(vj), y.digit(vj));
  if (alt == reshape_alternative::a) {
    a.set_digit(vj, tj); // keeps t1's digit at i
    b.set_digit(vi, ti); // keeps t2's digit at j
  } else {
    a.set_digit(vi, ti); // keeps t1's digit at j
    b.set_digit(vj, tj); // keeps t2's digit at i
  }
  e.remove_term(x);
  e.remove_term(y);
  e.add_term(std::move(a));
  e.add_term(std::move(b));
  return e;
}

/*! \brief Idempotent on this representation; kept as the explicit rule. */
inline esop cancel_duplicates(esop e) { return e; }

// ------------------------------------------------------------ construction

/*! \brief Disjoint-cube translation of an OR of cubes (disjoint OR = XOR). */
inline esop sop_to_esop(std::uint32_t n, const std::vector<std::string>& cubes) {
  // sharp(a, b): disjoint cubes covering a minus b
  auto sharp = [](const std::string& a, const std::string& b) {
    std::vector<std::string> parts;
    if (!detail::cubes_intersect(a, b))
      return std::vector<std::string>{a};
    std::string cur = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[i] == '-' || cur[i] != '-')
        continue;
      std::string piece = cur;
      piece[i] = b[i] == '0' ? '1' : '0';
      parts.push_back(std::move(piece));
      cur[i] = b[i];
    }
    return parts; // the rest of cur is inside b
  };

  std::vector<std::string> disjoint;
  for (const auto& cube : cubes) {
    if (cube.size() != n)
      throw std::invalid_argument("sop_to_esop: cube arity mismatch");
    std::vector<std::string> parts{cube};
    for (const auto& d : disjoint) {
      std::vector<std::string> next;
      for (const auto& p : parts)
        for (auto& piece : sharp(p, d))
          next.push_back(std::move(piece));
      parts = std::move(next);
      if (parts.empty())
        break;
    }
    for (auto& p : parts)
      disjoint.push_back(std::move(p));
  }

  esop e(n);
  for (const auto& c : disjoint)
    e.add_term(term::from_cube(c));
  return e;
}

inline std::vector<std::string> on_cubes(const logic_spec& spec, std::uint32_t output_index) {
  std::vector<std::string> cubes;
  for (const auto& c : spec.cubes)
    if (c.out[output_index] == '1')
      cubes.push_back(c.in);
  return cubes;
}

enum class init_strategy { minterms, pprm, best_fixed, disjoint_cubes };

inline esop fprm_terms(const truth_table& tt, const std::vector<std::uint8_t>& polarity) {
  const bitvec coeff = fprm_coefficients(tt, polarity);
  const std::uint32_t n = tt.num_vars();
  esop e(n);
  for (std::uint64_t m = 0; m < coeff.size(); ++m) {
    if (!coeff.get(m))
      continue;
    term t(n);
    for (std::uint32_t var = 1; var <= n; ++var)
      if ((m >> (n - var)) & 1ull)
        t.set_digit(var, polarity[var - 1] ? digit_negative : digit_positive);
    e.add_term(std::move(t));
  }
  return e;
}

inline esop init_marking(const truth_table& tt, init_strategy strategy) {
  const std::uint32_t n = tt.num_vars();
  switch (strategy) {
  case init_strategy::minterms: {
    esop e(n);
    for (std::uint64_t idx = 0; idx < tt.num_points(); ++idx)
      if (tt.value(idx))
        e.add_term(term::from_minterm(assignment::from_index(n, idx)));
    return e;
  }
  case init_strategy::pprm:
    return fprm_terms(tt, std::vector<std::uint8_t>(n, 0));
  case init_strategy::best_fixed: {
    const auto search = best_fixed_polarity(tt);
    return fprm_terms(tt, search.polarity);
  }
  default:
    throw std::invalid_argument("init_marking: disjoint_cubes needs a cube list");
  }
}

inline esop init_marking(const logic_spec& spec, std::uint32_t output_index, init_strategy strategy) {
  if (strategy == init_strategy::disjoint_cubes)
    return sop_to_esop(spec.n_inputs, on_cubes(spec, output_index));
  return init_marking(to_truth_table(spec, output_index), strategy);
}

// ------------------------------------------------------------------ text io

/*! \brief One cube line per term; lines XOR together. Header `.n <vars>`. */
inline void emit_esop(const esop& e, std::ostream& os) {
  os << ".n " << e.num_vars() << "\n";
  for (const auto& t : e.terms())
    os << t.cube_string() << "\n";
}

inline std::string emit_esop(const esop& e) {
  std::ostringstream os;
  emit_esop(e, os);
  return os.str();
}

inline esop parse_esop(std::istream& is) {
  std::uint64_t line_no = 0;
  std::uint32_t n = 0;
  bool have_n = false;
  std::vector<term> terms;
  std::string raw;
  while (std::getline(is, raw)) {
    ++line_no;
    if (auto pos = raw.find('#'); pos != std::string::npos)
      raw.erase(pos);
    auto tokens = detail::split_ws(raw);
    if (tokens.empty())
      continue;
    if (tokens[0] == ".n") {
      if (tokens.size() < 2)
        throw parse_error(".n expects a number", line_no);
      n = static_cast<std::uint32_t>(std::stoul(tokens[1]));
      have_n = true;
      continue;
    }
    if (!have_n)
      throw parse_error("term line before .n header", line_no);
    if (tokens.size() != 1 || tokens[0].size() != n)
      throw parse_error("term line must be one cube of " + std::to_string(n) + " characters", line_no);
    try {
      terms.push_back(term::from_cube(tokens[0]));
    } catch (const std::invalid_argument& ex) {
      throw parse_error(ex.what(), line_no);
    }
  }
  if (!have_n)
    throw parse_error("missing .n header");
  return esop::from_terms(n, std::move(terms));
}

inline esop parse_esop(const std::string& text) {
  std::istringstream is(text);
  return parse_esop(is);
}

} // namespace sierp
