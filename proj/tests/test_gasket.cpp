#include <doctest.h>

#include "sierp/gasket.hpp"
#include "sierp/rng.hpp"

#include "oracles.hpp"

using namespace sierp;

TEST_CASE("coordinate indexing is base 3 with x1 major") {
  CHECK(coordinate_index(coordinate{1, 1, 1}) == 0);
  CHECK(coordinate_index(coordinate{1, 1, 2}) == 1);
  CHECK(coordinate_index(coordinate{2, 1, 1}) == 9);
  CHECK(coordinate_index(coordinate{3, 3, 3}) == 26);
  for (std::uint64_t idx = 0; idx < 27; ++idx)
    CHECK(coordinate_index(coordinate_from_index(3, idx)) == idx);
}

TEST_CASE("spectrum cells of the running example") {
  const auto tt = truth_table::from_bits("10001111");
  const auto g = build_spectrum(tt);
  CHECK(g.cell(coordinate{2, 2, 2}));       // the point f(0,0,0)
  CHECK_FALSE(g.cell(coordinate{1, 2, 2})); // f(000) ^ f(100) cancels
  CHECK(g.cell(coordinate{1, 1, 1}));       // fold of the whole vector
  CHECK_FALSE(g.cell(coordinate{3, 1, 1})); // the x1=1 half folds to zero
}

TEST_CASE("constant zero has an all-zero spectrum") {
  const auto g = build_spectrum(truth_table::constant(3, false));
  CHECK_FALSE(g.spectrum().any());
}

TEST_CASE("spectrum agrees with the brute-force subcube XOR") {
  splitmix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(5));
    const auto tt = oracles::random_tt(n, rng);
    const auto g = build_spectrum(tt);
    coordinate c(n);
    do {
      CHECK(g.cell(c) == oracles::spectrum_cell(tt, c));
      CHECK(spectrum_value(tt, c) == g.cell(c));
    } while (next_coordinate(c));
  }
}

TEST_CASE("point cells evaluate the function") {
  const auto tt = truth_table::from_bits("10001111");
  CHECK(spectrum_value(tt, coordinate{2, 2, 2}) == tt.value(assignment{{0, 0, 0}}));
  CHECK(spectrum_value(tt, coordinate{3, 2, 3}) == tt.value(assignment{{1, 0, 1}}));
}

TEST_CASE("triangle rule holds on random spectra") {
  splitmix64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(5));
    const auto g = build_spectrum(oracles::random_tt(n, rng));
    coordinate c(n);
    do {
      for (std::uint32_t var = 1; var <= n; ++var) {
        coordinate d = c, p = c;
        d.set_digit(var, digit_absent);
        p.set_digit(var, digit_negative);
        coordinate q = c;
        q.set_digit(var, digit_positive);
        const bool triple_xor = g.cell(d) ^ g.cell(p) ^ g.cell(q);
        CHECK_FALSE(triple_xor);
      }
    } while (next_coordinate(c));
  }
}

TEST_CASE("spectrum is linear in the function") {
  splitmix64 rng(17);
  const auto f = oracles::random_tt(4, rng);
  const auto g = oracles::random_tt(4, rng);
  truth_table fg = f;
  fg.xor_with(g);
  auto sf = build_spectrum(f).spectrum();
  sf.xor_with(build_spectrum(g).spectrum());
  CHECK(sf == build_spectrum(fg).spectrum());
}

TEST_CASE("dense spectrum is capped at 16 variables") {
  CHECK_THROWS_AS(build_spectrum(truth_table::constant(17, false)), capacity_error);
}

TEST_CASE("term contribution: pinned cases") {
  CHECK(term_contribution(term{1, 1}, coordinate{2, 3}));       // constant covers point cells
  CHECK_FALSE(term_contribution(term{1, 1}, coordinate{1, 3})); // folds over x1 and cancels
  CHECK(term_contribution(term{2, 3}, coordinate{1, 3}));
}

TEST_CASE("term contribution equals the brute-force subcube XOR of the term") {
  splitmix64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(5));
    std::vector<std::uint8_t> td(n), cd(n);
    for (auto& d : td)
      d = static_cast<std::uint8_t>(1 + rng.below(3));
    for (auto& d : cd)
      d = static_cast<std::uint8_t>(1 + rng.below(3));
    const term t{std::vector<std::uint8_t>(td)};
    const coordinate c{std::vector<std::uint8_t>(cd)};
    // the term's own characteristic function
    bitvec chi(1ull << n);
    for (std::uint64_t idx = 0; idx < chi.size(); ++idx)
      chi.set(idx, t.evaluates(assignment::from_index(n, idx)));
    const truth_table chi_tt(n, std::move(chi));
    CHECK(term_contribution(t, c) == oracles::spectrum_cell(chi_tt, c));
  }
}

TEST_CASE("structural counts") {
  const auto s1 = compute_structural_counts(1);
  CHECK(s1.vertex_count == 3);
  CHECK(s1.triangle_cells == 3);
  CHECK(s1.empty_cells == 0);

  const auto s2 = compute_structural_counts(2);
  CHECK(s2.vertex_count == 9);
  CHECK(s2.triangle_cells == 10);
  CHECK(s2.empty_cells == 1);
  CHECK(s2.alt_cell_count == 6);

  CHECK(compute_structural_counts(3).vertex_count == 27);

  for (std::uint32_t n = 1; n <= 12; ++n) {
    const auto s = compute_structural_counts(n);
    CHECK(s.vertex_count + s.empty_cells == s.triangle_cells);
  }
}

TEST_CASE("grid positions: one row per level, vertices have disjoint i and j") {
  const std::uint32_t n = 3;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  coordinate c(n);
  do {
    const auto [row, col] = grid_position(c);
    CHECK(row < (1ull << n));
    CHECK(col <= row);
    CHECK(seen.insert({row, col}).second); // distinct cells
  } while (next_coordinate(c));
  CHECK(seen.size() == pow3(n));
}

TEST_CASE("a marking matches the spectrum exactly when it is a valid ESOP") {
  const auto tt = truth_table::from_bits("10001111");
  auto g = build_spectrum(tt);
  g.marking().insert(coordinate{1, 2, 2});
  g.marking().insert(coordinate{3, 1, 3});
  g.marking().insert(coordinate{3, 3, 2});
  CHECK(marking_matches_spectrum(g));
  g.marking().erase(coordinate{3, 1, 3});
  CHECK_FALSE(marking_matches_spectrum(g));
}

TEST_CASE("checking point cells only is equivalent to checking all cells") {
  splitmix64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(2));
    const auto tt = oracles::random_tt(n, rng);
    auto g = build_spectrum(tt);
    // random marking, valid or not
    coordinate c(n);
    do {
      if (rng.below(4) == 0)
        g.marking().insert(c);
    } while (next_coordinate(c));

    bool all_cells = marking_matches_spectrum(g);
    bool point_cells = true;
    for (std::uint64_t idx = 0; idx < tt.num_points(); ++idx) {
      const auto a = assignment::from_index(n, idx);
      bool acc = false;
      for (const auto& t : g.marking())
        acc ^= t.evaluates(a);
      if (acc != tt.value(idx))
        point_cells = false;
    }
    CHECK(all_cells == point_cells);
  }
}
