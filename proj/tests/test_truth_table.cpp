#include <doctest.h>

#include "sierp/expansions.hpp"
#include "sierp/rng.hpp"
#include "sierp/truth_table.hpp"

#include "oracles.hpp"

using namespace sierp;

TEST_CASE("index convention: x1 is the most significant bit") {
  // f = x1 | (~x2 & ~x3)
  const auto tt = truth_table::from_bits("10001111");
  CHECK(tt.num_vars() == 3);
  CHECK(tt.value(assignment{{0, 0, 0}}));
  CHECK_FALSE(tt.value(assignment{{0, 1, 1}}));
  CHECK(tt.value(assignment{{1, 1, 1}}));
  CHECK(tt.value(assignment{{1, 0, 0}}));
  CHECK_FALSE(tt.value(assignment{{0, 0, 1}}));
}

TEST_CASE("assignment round-trips through its index") {
  for (std::uint64_t idx = 0; idx < 32; ++idx) {
    const auto a = assignment::from_index(5, idx);
    CHECK(a.index() == idx);
  }
}

TEST_CASE("all-zero table evaluates to zero everywhere") {
  const auto tt = truth_table::constant(3, false);
  for (std::uint64_t idx = 0; idx < 8; ++idx)
    CHECK_FALSE(tt.value(idx));
}

TEST_CASE("cofactors of the running example") {
  const auto tt = truth_table::from_bits("10001111");
  CHECK(tt.cofactor(1, false) == truth_table::from_bits("1000"));
  CHECK(tt.cofactor(1, true) == truth_table::from_bits("1111"));
}

TEST_CASE("cofactor of a constant stays constant") {
  const auto tt = truth_table::constant(4, true);
  const auto c = tt.cofactor(2, false);
  CHECK(c.num_vars() == 3);
  CHECK(c == truth_table::constant(3, true));
}

TEST_CASE("cofactor rejects out-of-range variables") {
  const auto tt = truth_table::from_bits("1001");
  CHECK_THROWS_AS(tt.cofactor(0, false), std::invalid_argument);
  CHECK_THROWS_AS(tt.cofactor(3, false), std::invalid_argument);
}

TEST_CASE("dense table is capped at 24 variables") {
  CHECK_THROWS_AS(truth_table::constant(25, false), capacity_error);
}

TEST_CASE("Shannon recombination restores the function for every variable") {
  splitmix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(4));
    const auto tt = oracles::random_tt(n, rng);
    for (std::uint32_t var = 1; var <= n; ++var) {
      for (auto kind : {expansion_kind::shannon, expansion_kind::positive_davio,
                        expansion_kind::negative_davio}) {
        const auto e = expand(tt, var, kind);
        CHECK(recombine(e) == tt);
      }
    }
  }
}

TEST_CASE("expansion coefficient vectors have exactly one zero") {
  for (auto kind : {expansion_kind::shannon, expansion_kind::positive_davio,
                    expansion_kind::negative_davio}) {
    const auto c = expansion_coefficients(kind);
    CHECK(static_cast<int>(c[0]) + c[1] + c[2] == 2);
  }
  CHECK(expansion_coefficients(expansion_kind::shannon) == std::array<std::uint8_t, 3>{1, 1, 0});
  CHECK(expansion_coefficients(expansion_kind::positive_davio) ==
        std::array<std::uint8_t, 3>{0, 1, 1});
  CHECK(expansion_coefficients(expansion_kind::negative_davio) ==
        std::array<std::uint8_t, 3>{1, 0, 1});
}
