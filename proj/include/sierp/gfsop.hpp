/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file gfsop.hpp
  \brief GF(4) sums of products of shifted-literal powers.

  A term is a scalar coefficient times one literal (X_i + shift)^power per
  variable; power 0 means the variable is absent from the term. Terms are
  summed in GF(4). Minimization searches the fixed-polarity spectra and
  then refactors single variables under alternative shifts, so the result
  is never worse than the best fixed-polarity form.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sierp/esop.hpp" // cost_report
#include "sierp/gf4.hpp"
#include "sierp/pla.hpp"

namespace sierp {

struct gf4_term {
  std::uint8_t coeff = 1; // 1..3, never 0
  std::vector<gf4_literal> factors; // one per variable

  std::uint32_t literal_count() const {
    std::uint32_t c = 0;
    for (const auto& f : factors)
      c += (f.power >= 1);
    return c;
  }

  std::uint8_t eval(const std::vector<std::uint8_t>& point) const {
    std::uint8_t v = coeff;
    for (std::size_t i = 0; i < factors.size() && v; ++i)
      v = gf4_mul(v, factors[i].eval(point[i]));
    return v;
  }

  auto operator<=>(const gf4_term&) const = default;
};

class gfsop {
public:
  explicit gfsop(std::uint32_t n) : n_(n) {}

  static gfsop from_terms(std::uint32_t n, std::vector<gf4_term> terms) {
    gfsop g(n);
    for (auto& t : terms)
      g.add_term(std::move(t));
    return g;
  }

  std::uint32_t num_vars() const { return n_; }
  const std::vector<gf4_term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /*! \brief Insert combining coefficients of equal factor vectors. */
  void add_term(gf4_term t) {
    if (t.factors.size() != n_)
      throw std::invalid_argument("gfsop: term arity mismatch");
    if (t.coeff == 0)
      return;
    for (auto& f : t.factors)
      if (f.power == 0)
        f.shift = 0; // canonical form for an absent factor
    auto same = [&](const gf4_term& o) { return o.factors == t.factors; };
    auto it = std::find_if(terms_.begin(), terms_.end(), same);
    if (it == terms_.end()) {
      terms_.push_back(std::move(t));
      std::sort(terms_.begin(), terms_.end());
    } else {
      it->coeff = gf4_add(it->coeff, t.coeff);
      if (it->coeff == 0) {
        terms_.erase(it);
      }
    }
  }

  std::uint8_t eval(const std::vector<std::uint8_t>& point) const {
    if (point.size() != n_)
      throw std::invalid_argument("gfsop: point arity mismatch");
    std::uint8_t acc = 0;
    for (const auto& t : terms_)
      acc = gf4_add(acc, t.eval(point));
    return acc;
  }

  cost_report cost() const {
    cost_report c;
    c.term_count = terms_.size();
    for (const auto& t : terms_)
      c.literal_count += t.literal_count();
    return c;
  }

  bool operator==(const gfsop&) const = default;

private:
  std::uint32_t n_;
  std::vector<gf4_term> terms_; // sorted, coefficient-combined
};

struct gfsop_verdict {
  bool valid = false;
  std::uint64_t points_checked = 0;
  std::optional<std::vector<std::uint8_t>> counterexample;
};

inline std::vector<std::uint8_t> point_from_index(std::uint32_t n, std::uint64_t idx) {
  std::vector<std::uint8_t> p(n);
  for (std::uint32_t i = n; i-- > 0;) {
    p[i] = idx & 3u;
    idx >>= 2;
  }
  return p;
}

inline gfsop_verdict gfsop_verify(const gfsop& g, const quaternary_function& f) {
  if (g.num_vars() != f.num_vars())
    throw std::invalid_argument("gfsop_verify: arity mismatch");
  gfsop_verdict v;
  v.points_checked = f.num_points();
  for (std::uint64_t idx = 0; idx < f.num_points(); ++idx) {
    const auto point = point_from_index(f.num_vars(), idx);
    if (g.eval(point) != f.value(idx)) {
      v.counterexample = point;
      return v;
    }
  }
  v.valid = true;
  return v;
}

inline cost_report gfsop_cost(const gfsop& g) { return g.cost(); }

/*! \brief Terms of a fixed-polarity spectrum: one per nonzero coefficient. */
inline gfsop spectrum_to_gfsop(std::uint32_t n, const std::vector<std::uint8_t>& coeffs,
                               const std::vector<std::uint8_t>& polarity) {
  gfsop g(n);
  for (std::uint64_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0)
      continue;
    gf4_term t;
    t.coeff = coeffs[k];
    t.factors.resize(n);
    for (std::uint32_t var = 1; var <= n; ++var) {
      const std::uint8_t p = (k >> (2 * (n - var))) & 3u;
      t.factors[var - 1] = p ? gf4_literal{polarity[var - 1], p} : gf4_literal{};
    }
    g.add_term(std::move(t));
  }
  return g;
}

// -------------------------------------------------------------- pairing

/*!
  \brief Fold a binary multi-output spec into 4-valued functions.

  Inputs pair in declaration order, X_j = 2*x_{2j-1} + x_{2j}; an odd
  trailing input sits in the low bit of its quaternary variable and the
  high bit is a padding position the function ignores. Outputs pair the
  same way, Y_j = 2*y_{2j-1} + y_{2j}, an odd trailing output staying in
  the low bit. One function per output pair.
*/
inline std::vector<quaternary_function> pair_binary(const logic_spec& spec) {
  if (spec.n_inputs > 2 * 12)
    throw capacity_error("pair_binary: too many inputs for a dense quaternary table");
  const std::uint32_t n4 = (spec.n_inputs + 1) / 2;
  const std::uint32_t m4 = (spec.n_outputs + 1) / 2;

  std::vector<truth_table> outs;
  outs.reserve(spec.n_outputs);
  for (std::uint32_t o = 0; o < spec.n_outputs; ++o)
    outs.push_back(to_truth_table(spec, o));

  std::vector<quaternary_function> result;
  result.reserve(m4);
  for (std::uint32_t j = 0; j < m4; ++j) {
    std::vector<std::uint8_t> values(1ull << (2 * n4));
    for (std::uint64_t idx = 0; idx < values.size(); ++idx) {
      assignment a;
      a.bits.resize(spec.n_inputs);
      for (std::uint32_t q = 0; q < n4; ++q) {
        const std::uint8_t x = (idx >> (2 * (n4 - 1 - q))) & 3u;
        const std::uint32_t hi_var = 2 * q;     // 0-based input fed by the high bit
        const std::uint32_t lo_var = 2 * q + 1; // and by the low bit
        if (lo_var < spec.n_inputs) {
          a.bits[hi_var] = (x >> 1) & 1u;
          a.bits[lo_var] = x & 1u;
        } else {
          a.bits[hi_var] = x & 1u; // trailing input takes the low bit
        }
      }
      const std::uint32_t hi_out = 2 * j;
      const std::uint32_t lo_out = 2 * j + 1;
      std::uint8_t y = 0;
      if (lo_out < spec.n_outputs)
        y = static_cast<std::uint8_t>(2 * outs[hi_out].value(a) + outs[lo_out].value(a));
      else
        y = static_cast<std::uint8_t>(outs[hi_out].value(a));
      values[idx] = y;
    }
    result.emplace_back(n4, std::move(values));
  }
  return result;
}

// --------------------------------------------------------- minimization

struct gfsop_config {
  std::uint32_t exhaustive_polarity_vars = 5; // all 4^n polarities up to here
  std::uint64_t rng_seed = 1;                 // recorded; the search itself is deterministic
};

struct gfsop_result {
  gfsop expr{1};
  cost_report cost;
  cost_report spectrum_cost; // best fixed-polarity cost, before refactoring
  std::vector<std::uint8_t> polarity;
  gfsop_verdict verified;
  std::uint64_t seed = 0;
};

namespace detail {

inline cost_report spectrum_cost_of(const std::vector<std::uint8_t>& coeffs, std::uint32_t n) {
  cost_report c;
  for (std::uint64_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0)
      continue;
    ++c.term_count;
    for (std::uint32_t var = 0; var < n; ++var)
      c.literal_count += ((k >> (2 * var)) & 3u) != 0;
  }
  return c;
}

// One pass of single-variable refactoring: groups of terms that agree on
// every factor outside var span a one-variable function; re-expanding it
// under another shift replaces the group when strictly cheaper.
inline bool refactor_pass(gfsop& g, std::uint32_t var) {
  const std::uint32_t n = g.num_vars();
  std::map<std::vector<gf4_literal>, std::vector<gf4_term>> groups;
  for (const auto& t : g.terms()) {
    std::vector<gf4_literal> key;
    key.reserve(n - 1);
    for (std::uint32_t i = 0; i < n; ++i)
      if (i != var - 1)
        key.push_back(t.factors[i]);
    groups[std::move(key)].push_back(t);
  }

  bool changed = false;
  gfsop next(n);
  for (auto& [key, members] : groups) {
    // the group's dependence on var as a table over 0..3
    std::array<std::uint8_t, 4> dep{0, 0, 0, 0};
    for (std::uint8_t v = 0; v < 4; ++v)
      for (const auto& t : members)
        dep[v] = gf4_add(dep[v], gf4_mul(t.coeff, t.factors[var - 1].eval(v)));

    cost_report old_cost;
    old_cost.term_count = members.size();
    for (const auto& t : members)
      old_cost.literal_count += t.factors[var - 1].power >= 1;

    std::optional<std::uint8_t> best_shift;
    cost_report best_cost = old_cost;
    for (std::uint8_t s = 0; s < 4; ++s) {
      const auto c = davio_coeffs(dep, s);
      cost_report cand;
      for (std::uint8_t k = 0; k < 4; ++k) {
        if (c[k] == 0)
          continue;
        ++cand.term_count;
        cand.literal_count += k >= 1;
      }
      if (cand < best_cost) {
        best_cost = cand;
        best_shift = s;
      }
    }

    if (!best_shift) {
      for (auto& t : members)
        next.add_term(std::move(t));
      continue;
    }
    changed = true;
    const auto c = davio_coeffs(dep, *best_shift);
    for (std::uint8_t k = 0; k < 4; ++k) {
      if (c[k] == 0)
        continue;
      gf4_term t;
      t.coeff = c[k];
      t.factors.resize(n);
      std::uint32_t ki = 0;
      for (std::uint32_t i = 0; i < n; ++i)
        if (i != var - 1)
          t.factors[i] = key[ki++];
      t.factors[var - 1] = k ? gf4_literal{*best_shift, k} : gf4_literal{};
      next.add_term(std::move(t));
    }
  }
  if (changed)
    g = std::move(next);
  return changed;
}

} // namespace detail

/*!
  \brief Best fixed-polarity spectrum, then per-variable refactoring.

  Exhaustive over all 4^n polarity vectors for small n, greedy per
  variable beyond; ties go to the numerically smallest polarity. Each
  refactoring move is kept only when it lowers (terms, literals), so the
  result never costs more than the best spectrum.
*/
inline gfsop_result minimize_gfsop(const quaternary_function& f, const gfsop_config& cfg = {}) {
  const std::uint32_t n = f.num_vars();
  if (n > max_spectrum_vars4)
    throw capacity_error("minimize_gfsop: capped at 8 variables");

  std::vector<std::uint8_t> best_pol(n, 0);
  std::vector<std::uint8_t> best_coeffs = gf4_spectrum(f, best_pol);
  cost_report best_cost = detail::spectrum_cost_of(best_coeffs, n);

  if (n <= cfg.exhaustive_polarity_vars) {
    std::vector<std::uint8_t> pol(n, 0);
    const std::uint64_t total = 1ull << (2 * n);
    for (std::uint64_t code = 1; code < total; ++code) {
      for (std::uint32_t var = 0; var < n; ++var)
        pol[var] = (code >> (2 * (n - 1 - var))) & 3u;
      auto coeffs = gf4_spectrum(f, pol);
      const auto c = detail::spectrum_cost_of(coeffs, n);
      if (c < best_cost) { // strict: the lowest polarity code wins ties
        best_cost = c;
        best_pol = pol;
        best_coeffs = std::move(coeffs);
      }
    }
  } else {
    for (std::uint32_t var = 0; var < n; ++var) {
      std::uint8_t keep = 0;
      for (std::uint8_t s = 1; s < 4; ++s) {
        auto pol = best_pol;
        pol[var] = s;
        const auto c = detail::spectrum_cost_of(gf4_spectrum(f, pol), n);
        if (c < best_cost) {
          best_cost = c;
          keep = s;
        }
      }
      best_pol[var] = keep;
    }
    best_coeffs = gf4_spectrum(f, best_pol);
    best_cost = detail::spectrum_cost_of(best_coeffs, n);
  }

  gfsop_result res;
  res.polarity = best_pol;
  res.spectrum_cost = best_cost;
  res.seed = cfg.rng_seed;
  res.expr = spectrum_to_gfsop(n, best_coeffs, best_pol);

  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t var = 1; var <= n; ++var)
      changed |= detail::refactor_pass(res.expr, var);
  }

  res.cost = res.expr.cost();
  res.verified = gfsop_verify(res.expr, f);
  return res;
}

// ------------------------------------------------------------------ text io

/*! \brief One term per line: `c : s1.p1 s2.p2 ... sn.pn`. */
inline void emit_gfsop(const gfsop& g, std::ostream& os) {
  os << "# vars=" << g.num_vars() << "\n";
  for (const auto& t : g.terms()) {
    os << int(t.coeff) << " :";
    for (const auto& f : t.factors)
      os << ' ' << int(f.shift) << '.' << int(f.power);
    os << "\n";
  }
}

inline std::string emit_gfsop(const gfsop& g) {
  std::ostringstream os;
  emit_gfsop(g, os);
  return os.str();
}

inline gfsop parse_gfsop(std::istream& is) {
  std::uint64_t line_no = 0;
  std::optional<std::uint32_t> n;
  std::vector<gf4_term> terms;
  std::string raw;
  while (std::getline(is, raw)) {
    ++line_no;
    if (auto pos = raw.find('#'); pos != std::string::npos)
      raw.erase(pos);
    auto tokens = detail::split_ws(raw);
    if (tokens.empty())
      continue;
    if (tokens.size() < 2 || tokens[1] != ":")
      throw parse_error("expected `c : s.p ...`", line_no);
    gf4_term t;
    const int coeff = std::stoi(tokens[0]);
    if (coeff < 1 || coeff > 3)
      throw parse_error("coefficient must be 1, 2 or 3", line_no);
    t.coeff = static_cast<std::uint8_t>(coeff);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const auto dot = tokens[i].find('.');
      if (dot == std::string::npos)
        throw parse_error("literal must be shift.power", line_no);
      const int s = std::stoi(tokens[i].substr(0, dot));
      const int p = std::stoi(tokens[i].substr(dot + 1));
      if (s < 0 || s > 3 || p < 0 || p > 3)
        throw parse_error("shift and power must be in 0..3", line_no);
      t.factors.push_back({static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(p)});
    }
    if (!n)
      n = static_cast<std::uint32_t>(t.factors.size());
    else if (*n != t.factors.size())
      throw parse_error("terms disagree on the variable count", line_no);
    terms.push_back(std::move(t));
  }
  if (!n)
    throw parse_error("empty GFSOP file");
  return gfsop::from_terms(*n, std::move(terms));
}

inline gfsop parse_gfsop(const std::string& text) {
  std::istringstream is(text);
  return parse_gfsop(is);
}

/*! \brief Quaternary function file: `.v n`, `.r 4`, then 4^n digits. */
inline void emit_q4(const quaternary_function& f, std::ostream& os) {
  os << ".v " << f.num_vars() << "\n.r 4\n";
  const auto& vals = f.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    os << char('0' + vals[i]);
    if ((i + 1) % 64 == 0 || i + 1 == vals.size())
      os << "\n";
  }
}

inline std::string emit_q4(const quaternary_function& f) {
  std::ostringstream os;
  emit_q4(f, os);
  return os.str();
}

inline quaternary_function parse_q4(std::istream& is) {
  std::uint64_t line_no = 0;
  std::optional<std::uint32_t> n;
  std::vector<std::uint8_t> values;
  std::string raw;
  while (std::getline(is, raw)) {
    ++line_no;
    if (auto pos = raw.find('#'); pos != std::string::npos)
      raw.erase(pos);
    auto tokens = detail::split_ws(raw);
    if (tokens.empty())
      continue;
    if (tokens[0] == ".v") {
      if (tokens.size() < 2)
        throw parse_error(".v expects a number", line_no);
      n = static_cast<std::uint32_t>(std::stoul(tokens[1]));
      continue;
    }
    if (tokens[0] == ".r") {
      if (tokens.size() < 2 || tokens[1] != "4")
        throw parse_error("only radix 4 is supported", line_no);
      continue;
    }
    for (const auto& tok : tokens)
      for (char c : tok) {
        if (c < '0' || c > '3')
          throw parse_error(std::string("invalid digit '") + c + "'", line_no);
        values.push_back(static_cast<std::uint8_t>(c - '0'));
      }
  }
  if (!n)
    throw parse_error("missing .v header");
  if (values.size() != (1ull << (2 * *n)))
    throw parse_error("expected " + std::to_string(1ull << (2 * *n)) + " digits, got " +
                      std::to_string(values.size()));
  return quaternary_function(*n, std::move(values));
}

inline quaternary_function parse_q4(const std::string& text) {
  std::istringstream is(text);
  return parse_q4(is);
}

} // namespace sierp
