/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file minimize.hpp
  \brief Iterated local search over the gasket rewrite rules.

  One run is: pick the cheapest initial marking, merge to a local
  fixpoint, then walk: apply a few random split/reshape moves, merge to a
  fixpoint again, and keep the best expression seen. When the best has not
  improved within perturbation_budget attempts, restore it and start a
  fresh walk, up to the configured number of restarts. Everything is
  driven by one seeded generator, so equal inputs and configs replay
  identical runs, trace included.
*/

#pragma once

#include <cassert>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "sierp/esop.hpp"
#include "sierp/rng.hpp"
#include "sierp/verify.hpp"

namespace sierp {

enum class cost_metric { terms, literals, lexicographic };

struct minimize_config {
  cost_metric metric = cost_metric::lexicographic;
  std::optional<init_strategy> init; // nullopt: cheapest of pprm/minterms/disjoint_cubes
  std::uint64_t max_iterations = 10000;
  std::uint32_t restarts = 8;
  std::uint32_t perturbation_budget = 4; // moves per attempt and attempts per walk
  std::uint64_t rng_seed = 1;
  double time_limit_seconds = 0.0; // 0 disables; a running clock forfeits determinism
};

enum class rewrite_rule : std::uint8_t { init, merge, split, reshape, cancel, backtrack, restart };

inline const char* to_string(rewrite_rule r) {
  switch (r) {
  case rewrite_rule::init: return "init";
  case rewrite_rule::merge: return "merge";
  case rewrite_rule::split: return "split";
  case rewrite_rule::reshape: return "reshape";
  case rewrite_rule::cancel: return "cancel";
  case rewrite_rule::backtrack: return "backtrack";
  default: return "restart";
  }
}

struct trace_event {
  rewrite_rule rule;
  cost_report cost;
  bool operator==(const trace_event&) const = default;
};

struct minimize_result {
  esop expr{1};
  cost_report cost;
  std::uint64_t iterations = 0;
  std::vector<trace_event> trace;
  verdict verified;
  bool hit_time_limit = false;
};

namespace detail {

inline bool cost_less(const cost_report& a, const cost_report& b, cost_metric metric) {
  switch (metric) {
  case cost_metric::terms: return a.term_count < b.term_count;
  case cost_metric::literals: return a.literal_count < b.literal_count;
  default: return a < b;
  }
}

using trace_sink = std::vector<trace_event>*;

inline void record(trace_sink sink, rewrite_rule rule, const esop& e) {
  if (sink)
    sink->push_back({rule, e.cost()});
}

// First merge in scan order over the sorted term vector, i.e. the
// lexicographically smallest distance-1 pair.
inline bool apply_first_merge(esop& e, trace_sink sink) {
  const auto& ts = e.terms();
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (distance(ts[i], ts[j]) == 1) {
        e = merge_distance1(std::move(e), ts[i], ts[j]);
        record(sink, rewrite_rule::merge, e);
        return true;
      }
  return false;
}

inline esop local_fixpoint_impl(esop e, trace_sink sink) {
  while (apply_first_merge(e, sink)) {
  }
  return e;
}

inline esop perturb_impl(esop e, splitmix64& rng, std::uint32_t budget, trace_sink sink) {
  for (std::uint32_t move = 0; move < budget; ++move) {
    const auto& ts = e.terms();
    if (ts.empty())
      break;
    bool reshaped = false;
    if (ts.size() >= 2 && rng.coin()) {
      for (std::uint32_t attempt = 0; attempt < 8 && !reshaped; ++attempt) {
        const std::size_t i = rng.below(ts.size());
        const std::size_t j = rng.below(ts.size());
        if (i == j || distance(ts[i], ts[j]) != 2)
          continue;
        const auto alt = rng.coin() ? reshape_alternative::a : reshape_alternative::b;
        e = reshape_distance2(std::move(e), ts[i], ts[j], alt);
        record(sink, rewrite_rule::reshape, e);
        reshaped = true;
      }
    }
    if (!reshaped) {
      const term t = ts[rng.below(ts.size())];
      const std::uint32_t var = 1 + static_cast<std::uint32_t>(rng.below(e.num_vars()));
      e = split_term(std::move(e), t, var);
      record(sink, rewrite_rule::split, e);
    }
  }
  return e;
}

} // namespace detail

/*! \brief Cancel duplicates and merge distance-1 pairs until none apply. */
inline esop local_fixpoint(esop e) {
  return detail::local_fixpoint_impl(cancel_duplicates(std::move(e)), nullptr);
}

/*! \brief Up to budget random split/reshape moves; function preserved. */
inline esop perturb(esop e, splitmix64& rng, std::uint32_t budget) {
  return detail::perturb_impl(std::move(e), rng, budget, nullptr);
}

namespace detail {

inline esop pick_initial(const truth_table* tt, const std::vector<std::string>* cubes,
                         std::uint32_t n, const minimize_config& cfg) {
  if (cfg.init) {
    switch (*cfg.init) {
    case init_strategy::disjoint_cubes:
      if (!cubes)
        throw std::invalid_argument("minimize: disjoint_cubes init needs a cube list");
      return sop_to_esop(n, *cubes);
    default:
      if (!tt)
        throw capacity_error("minimize: the requested init strategy needs a dense truth table");
      return init_marking(*tt, *cfg.init);
    }
  }
  std::optional<esop> best;
  auto consider = [&](esop cand) {
    if (!best || cand.cost() < best->cost())
      best = std::move(cand);
  };
  if (tt) {
    consider(init_marking(*tt, init_strategy::pprm));
    consider(init_marking(*tt, init_strategy::minterms));
  }
  if (cubes)
    consider(sop_to_esop(n, *cubes));
  if (!best)
    throw std::invalid_argument("minimize: no initial strategy available");
  return *best;
}

template <typename VerifyFn>
minimize_result minimize_impl(const truth_table* tt, const std::vector<std::string>* cubes,
                              std::uint32_t n, const minimize_config& cfg, VerifyFn&& final_verify) {
  const auto t_start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (cfg.time_limit_seconds <= 0.0)
      return false;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t_start;
    return dt.count() >= cfg.time_limit_seconds;
  };

  minimize_result res;
  splitmix64 rng(cfg.rng_seed);

  esop cur = pick_initial(tt, cubes, n, cfg);
  record(&res.trace, rewrite_rule::init, cur);
  cur = local_fixpoint_impl(std::move(cur), &res.trace);

  esop best = cur;
  const std::uint32_t budget = cfg.perturbation_budget;

  bool stop = false;
  for (std::uint32_t episode = 0; episode <= cfg.restarts && !stop; ++episode) {
    if (episode > 0) {
      cur = best; // backtrack to the best expression and walk again
      record(&res.trace, rewrite_rule::backtrack, cur);
    }
    std::uint32_t fails = 0;
    while (fails < budget) {
      if (res.iterations >= cfg.max_iterations)
        { stop = true; break; }
      if (out_of_time())
        { stop = true; res.hit_time_limit = true; break; }
      ++res.iterations;
      cur = perturb_impl(std::move(cur), rng, budget, &res.trace);
      cur = local_fixpoint_impl(std::move(cur), &res.trace);
      if (cost_less(cur.cost(), best.cost(), cfg.metric)) {
        best = cur;
        fails = 0;
      } else {
        ++fails;
      }
    }
  }

  res.expr = std::move(best);
  res.cost = res.expr.cost();
  res.verified = final_verify(res.expr);
  assert(res.verified.valid);
  return res;
}

} // namespace detail

inline minimize_result minimize(const truth_table& tt, const minimize_config& cfg = {}) {
  return detail::minimize_impl(&tt, nullptr, tt.num_vars(), cfg,
                               [&](const esop& e) { return verify(e, tt); });
}

inline minimize_result minimize(const logic_spec& spec, std::uint32_t output_index,
                                const minimize_config& cfg = {}) {
  const std::vector<std::string> cubes = on_cubes(spec, output_index);
  if (spec.n_inputs <= max_dense_vars) {
    const truth_table tt = to_truth_table(spec, output_index);
    return detail::minimize_impl(&tt, &cubes, spec.n_inputs, cfg,
                                 [&](const esop& e) { return verify(e, tt); });
  }
  return detail::minimize_impl(nullptr, &cubes, spec.n_inputs, cfg, [&](const esop& e) {
    return verify(e, spec, output_index, verify_mode::sampled);
  });
}

} // namespace sierp
