#include <doctest.h>

#include "sierp/minimize.hpp"
#include "sierp/rng.hpp"

#include "oracles.hpp"

using namespace sierp;

TEST_CASE("fixpoint merges chains down to the zero function") {
  // x1~x2 ^ x1x2 ^ x1 is the zero function
  const auto e = esop::from_terms(2, {term{3, 2}, term{3, 3}, term{3, 1}});
  CHECK(local_fixpoint(e).empty());
}

TEST_CASE("fixpoint of the [1011] minterms reaches two terms") {
  const auto tt = truth_table::from_bits("1011");
  const auto fixed = local_fixpoint(init_marking(tt, init_strategy::minterms));
  CHECK(fixed.cost().term_count == 2);
  CHECK(oracles::esop_equals(fixed, tt));
}

TEST_CASE("fixpoint leaves merged-out expressions unchanged") {
  const auto e = esop::from_terms(2, {term{3, 1}});
  CHECK(local_fixpoint(e) == e);
}

TEST_CASE("fixpoint never increases cost and preserves the function") {
  splitmix64 rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(3));
    const auto tt = oracles::random_tt(n, rng);
    const auto init = init_marking(tt, init_strategy::minterms);
    const auto fixed = local_fixpoint(init);
    CHECK(fixed.cost() <= init.cost());
    CHECK(oracles::esop_equals(fixed, tt));
  }
}

TEST_CASE("minimize [1011] reaches two terms and two literals") {
  const auto res = minimize(truth_table::from_bits("1011"));
  CHECK(res.cost == cost_report{2, 2});
  CHECK(res.verified.valid);
}

TEST_CASE("minimize of the constant zero is empty") {
  const auto res = minimize(truth_table::constant(3, false));
  CHECK(res.expr.empty());
  CHECK(res.cost == cost_report{0, 0});
  CHECK(res.verified.valid);
}

TEST_CASE("minimize is deterministic, trace included") {
  splitmix64 rng(73);
  const auto tt = oracles::random_tt(4, rng);
  minimize_config cfg;
  cfg.max_iterations = 300;
  const auto a = minimize(tt, cfg);
  const auto b = minimize(tt, cfg);
  CHECK(a.cost == b.cost);
  CHECK(a.expr == b.expr);
  CHECK(a.iterations == b.iterations);
  CHECK(a.trace == b.trace);

  minimize_config other = cfg;
  other.rng_seed = 2;
  const auto c = minimize(tt, other);
  CHECK(c.verified.valid); // different walk, still valid
}

TEST_CASE("best cost is non-increasing along the trace and never worse than init") {
  splitmix64 rng(79);
  const auto tt = oracles::random_tt(4, rng);
  minimize_config cfg;
  cfg.max_iterations = 200;
  const auto res = minimize(tt, cfg);
  REQUIRE(!res.trace.empty());
  CHECK(res.trace.front().rule == rewrite_rule::init);
  const auto init_cost = res.trace.front().cost;
  CHECK(res.cost <= init_cost);
  // merges never raise the term count within a fixpoint
  for (std::size_t i = 1; i < res.trace.size(); ++i)
    if (res.trace[i].rule == rewrite_rule::merge)
      CHECK(res.trace[i].cost.term_count < res.trace[i - 1].cost.term_count);
}

TEST_CASE("perturb preserves the function; budget zero is a no-op") {
  splitmix64 rng(83);
  const auto tt = oracles::random_tt(3, rng);
  const auto e = local_fixpoint(init_marking(tt, init_strategy::minterms));

  splitmix64 moves(5);
  CHECK(perturb(e, moves, 0) == e);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = perturb(e, moves, 4);
    CHECK(oracles::esop_equals(p, tt));
  }
}

TEST_CASE("a single split doubles the one-term expression") {
  auto e = esop::from_terms(2, {term{3, 1}});
  splitmix64 moves(1);
  const auto p = perturb(e, moves, 1);
  CHECK(p.cost().term_count == 2);
  // whichever variable was chosen, the result is one of the two splits
  const auto var1 = split_term(e, term{3, 1}, 1);
  const auto var2 = split_term(e, term{3, 1}, 2);
  CHECK((p == var1 || p == var2));
}

TEST_CASE("two-variable functions reach the brute-force optimum") {
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i)
      if ((bits >> i) & 1)
        s[i] = '1';
    const auto tt = truth_table::from_bits(s);
    const auto best = oracles::min_esop_terms(tt, 3);
    REQUIRE(best.has_value());
    const auto res = minimize(tt);
    CHECK(res.cost.term_count == *best);
    CHECK(res.verified.valid);
  }
}

TEST_CASE("time limit returns a valid best-so-far result") {
  splitmix64 rng(89);
  const auto tt = oracles::random_tt(5, rng);
  minimize_config cfg;
  cfg.time_limit_seconds = 1e-9; // expires immediately
  const auto res = minimize(tt, cfg);
  CHECK(res.hit_time_limit);
  CHECK(res.verified.valid);
}

TEST_CASE("minimizing a spec output routes through cube lists when requested") {
  const auto spec = parse_pla(".i 2\n.o 1\n1- 1\n-1 1\n.e\n");
  minimize_config cfg;
  cfg.init = init_strategy::disjoint_cubes;
  const auto res = minimize(spec, 0, cfg);
  CHECK(res.verified.valid);
  CHECK(res.cost.term_count == 2);
}

TEST_CASE("wide functions skip the dense table and verify by sampling") {
  // 30 inputs: only the cube-level path is available
  std::string text = ".i 30\n.o 1\n";
  std::string a(30, '-'), b(30, '-'), c(30, '-');
  a[0] = '1';
  a[1] = '1';
  b[0] = '1';
  b[2] = '0';
  c[5] = '1';
  c[29] = '1';
  text += a + " 1\n" + b + " 1\n" + c + " 1\n.e\n";
  const auto spec = parse_pla(text);
  const auto res = minimize(spec, 0);
  CHECK(res.verified.valid);
  CHECK(res.verified.mode == verify_mode::sampled);
  CHECK(res.cost.term_count >= 3); // the three cubes overlap pairwise

  // a dense init strategy is a capacity error at this width
  minimize_config cfg;
  cfg.init = init_strategy::pprm;
  CHECK_THROWS_AS(minimize(spec, 0, cfg), capacity_error);
}
