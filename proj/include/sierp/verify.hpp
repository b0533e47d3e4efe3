/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file verify.hpp
  \brief Independent evaluation oracle for ESOP results.

  Exhaustive mode compares every point of the Boolean cube (n <= 24);
  sampled mode draws a deterministic pseudo-random sample plus the
  min/max corner of every cube of the reference and records the seed.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sierp/esop.hpp"
#include "sierp/pla.hpp"
#include "sierp/rng.hpp"
#include "sierp/truth_table.hpp"

namespace sierp {

enum class verify_mode { exhaustive, sampled };

struct verdict {
  bool valid = false;
  verify_mode mode = verify_mode::exhaustive;
  std::uint64_t points_checked = 0;
  std::uint64_t seed = 0; // sampled mode only
  std::optional<assignment> counterexample;
};

inline constexpr std::uint64_t default_sample_points = 1000000;

/*! \brief Truth table of an ESOP by XOR-accumulating each term's subcube. */
inline truth_table esop_truth_table(const esop& e) {
  const std::uint32_t n = e.num_vars();
  if (n > max_dense_vars)
    throw capacity_error("esop_truth_table: dense form capped at 24 variables");
  bitvec acc(1ull << n);
  for (const auto& t : e.terms()) {
    std::uint64_t fixed = 0, dash = 0;
    for (std::uint32_t var = 1; var <= n; ++var) {
      const std::uint64_t bit = 1ull << (n - var);
      if (t.digit(var) == digit_positive)
        fixed |= bit;
      else if (t.digit(var) == digit_absent)
        dash |= bit;
    }
    std::uint64_t sub = dash;
    while (true) {
      acc.flip(fixed | sub);
      if (sub == 0)
        break;
      sub = (sub - 1) & dash;
    }
  }
  return truth_table(n, std::move(acc));
}

inline verdict verify(const esop& e, const truth_table& reference,
                      verify_mode mode = verify_mode::exhaustive) {
  if (e.num_vars() != reference.num_vars())
    throw std::invalid_argument("verify: arity mismatch");
  if (mode != verify_mode::exhaustive)
    throw std::invalid_argument("verify: truth-table references are checked exhaustively");
  verdict v;
  v.mode = verify_mode::exhaustive;
  v.points_checked = reference.num_points();
  const truth_table got = esop_truth_table(e);
  if (got.bits() == reference.bits()) {
    v.valid = true;
    return v;
  }
  for (std::uint64_t idx = 0; idx < reference.num_points(); ++idx)
    if (got.value(idx) != reference.value(idx)) {
      v.counterexample = assignment::from_index(reference.num_vars(), idx);
      break;
    }
  return v;
}

namespace detail {

inline bool spec_on(const logic_spec& spec, std::uint32_t output_index, const assignment& a) {
  for (const auto& cube : spec.cubes) {
    if (cube.out[output_index] != '1')
      continue;
    bool covers = true;
    for (std::uint32_t i = 0; i < spec.n_inputs && covers; ++i) {
      if (cube.in[i] == '1' && !a.bits[i])
        covers = false;
      else if (cube.in[i] == '0' && a.bits[i])
        covers = false;
    }
    if (covers)
      return true;
  }
  return false;
}

} // namespace detail

inline verdict verify(const esop& e, const logic_spec& spec, std::uint32_t output_index,
                      verify_mode mode = verify_mode::exhaustive,
                      std::uint64_t sample_points = default_sample_points,
                      std::uint64_t seed = 1) {
  if (e.num_vars() != spec.n_inputs)
    throw std::invalid_argument("verify: arity mismatch");
  if (output_index >= spec.n_outputs)
    throw std::invalid_argument("verify: output index out of range");

  if (mode == verify_mode::exhaustive) {
    if (spec.n_inputs > max_dense_vars)
      throw capacity_error("verify: exhaustive mode capped at 24 inputs; use sampled mode");
    return verify(e, to_truth_table(spec, output_index));
  }

  verdict v;
  v.mode = verify_mode::sampled;
  v.seed = seed;
  const std::uint32_t n = spec.n_inputs;
  auto check = [&](const assignment& a) {
    ++v.points_checked;
    if (e.eval(a) != detail::spec_on(spec, output_index, a)) {
      if (!v.counterexample)
        v.counterexample = a;
      return false;
    }
    return true;
  };

  // every cube contributes its min and max corner
  for (const auto& cube : spec.cubes) {
    assignment lo, hi;
    lo.bits.resize(n);
    hi.bits.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      lo.bits[i] = cube.in[i] == '1';
      hi.bits[i] = cube.in[i] != '0';
    }
    if (!check(lo) || !check(hi)) {
      v.valid = false;
      return v;
    }
  }

  splitmix64 rng(seed);
  for (std::uint64_t s = 0; s < sample_points; ++s) {
    assignment a;
    a.bits.resize(n);
    for (std::uint32_t i = 0; i < n; ++i)
      a.bits[i] = rng.coin();
    if (!check(a)) {
      v.valid = false;
      return v;
    }
  }
  v.valid = true;
  return v;
}

} // namespace sierp
