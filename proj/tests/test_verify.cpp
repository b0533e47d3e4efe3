#include <doctest.h>

#include "sierp/rng.hpp"
#include "sierp/verify.hpp"

#include "oracles.hpp"

using namespace sierp;

TEST_CASE("the three-term marking verifies against its function") {
  const auto tt = truth_table::from_bits("10001111");
  esop e(3);
  e.add_term(term{1, 2, 2});
  e.add_term(term{3, 1, 3});
  e.add_term(term{3, 3, 2});
  const auto v = verify(e, tt);
  CHECK(v.valid);
  CHECK(v.points_checked == 8);
}

TEST_CASE("the two-term result of [1011] verifies") {
  const auto tt = truth_table::from_bits("1011");
  esop e(2);
  e.add_term(term{1, 1});
  e.add_term(term{2, 3});
  CHECK(verify(e, tt).valid);
}

TEST_CASE("a deleted term produces a counterexample") {
  const auto tt = truth_table::from_bits("10001111");
  esop e(3);
  e.add_term(term{1, 2, 2});
  e.add_term(term{3, 1, 3});
  const auto v = verify(e, tt);
  CHECK_FALSE(v.valid);
  REQUIRE(v.counterexample.has_value());
  CHECK(e.eval(*v.counterexample) != tt.value(*v.counterexample));
}

TEST_CASE("esop_truth_table agrees with pointwise evaluation") {
  splitmix64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(4));
    const auto tt = oracles::random_tt(n, rng);
    const auto e = init_marking(tt, init_strategy::pprm);
    const auto rebuilt = esop_truth_table(e);
    CHECK(rebuilt == tt);
  }
}

TEST_CASE("sampled verification against a spec is deterministic and seeded") {
  const auto spec = parse_pla(".i 4\n.o 1\n1--- 1\n-1-- 1\n.e\n");
  const auto e = sop_to_esop(4, on_cubes(spec, 0));
  const auto v1 = verify(e, spec, 0, verify_mode::sampled, 500, 99);
  const auto v2 = verify(e, spec, 0, verify_mode::sampled, 500, 99);
  CHECK(v1.valid);
  CHECK(v1.seed == 99);
  CHECK(v1.points_checked == v2.points_checked);

  // corrupt the expression: the cube corners catch it even with no samples
  esop bad = e;
  bad.add_term(term{3, 3, 3, 3});
  const auto vb = verify(bad, spec, 0, verify_mode::sampled, 0, 99);
  CHECK_FALSE(vb.valid);
  CHECK(vb.counterexample.has_value());
}

TEST_CASE("exhaustive verification is capped at 24 inputs") {
  logic_spec spec;
  spec.n_inputs = 30;
  spec.n_outputs = 1;
  const esop e(30);
  CHECK_THROWS_AS(verify(e, spec, 0, verify_mode::exhaustive), capacity_error);
  // sampled mode works at that scale (zero-function check)
  const auto v = verify(e, spec, 0, verify_mode::sampled, 100, 1);
  CHECK(v.valid);
}
