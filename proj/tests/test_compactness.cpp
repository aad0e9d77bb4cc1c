#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "zls/compactness.hpp"

using namespace zls;
using namespace zls::testing;

namespace {

// all locally minimal cores, by direct enumeration of all nonempty subsets
std::vector<std::vector<std::size_t>> all_minimal_cores(const System& sys,
                                                        WitnessKind mode) {
  const std::size_t m = sys.equations.size();
  std::vector<std::vector<std::size_t>> cores;
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t(1) << i)) subset.push_back(i);
    if (is_solvable(subsystem(sys, subset), mode)) continue;
    bool minimal = true;
    for (std::size_t skip = 0; skip < subset.size() && minimal; ++skip) {
      std::vector<std::size_t> smaller;
      for (std::size_t k = 0; k < subset.size(); ++k)
        if (k != skip) smaller.push_back(subset[k]);
      if (!is_solvable(subsystem(sys, smaller), mode)) minimal = false;
    }
    if (minimal) cores.push_back(std::move(subset));
  }
  return cores;
}

std::optional<std::size_t> brute_min_size(const System& sys, WitnessKind mode) {
  const std::size_t m = sys.equations.size();
  std::optional<std::size_t> best;
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t(1) << i)) subset.push_back(i);
    if (is_solvable(subsystem(sys, subset), mode)) continue;
    if (!best || subset.size() < *best) best = subset.size();
  }
  return best;
}

}  // namespace

TEST_CASE("minimal core on fixed systems") {
  SECTION("three pairwise-independent equations over two variables") {
    System s = parse_system("x + y = 0\nx - y = 0\nx + 3*y = 0\n");
    auto rep = minimal_core(s, WitnessKind::nontrivial);
    REQUIRE(rep.has_value());
    CHECK(rep->core_indices == std::vector<std::size_t>{0, 2});
    CHECK(rep->locally_minimal);
  }
  SECTION("a single torsion equation is its own core") {
    auto rep = minimal_core(parse_system("2*x = 0\n"), WitnessKind::nontrivial);
    REQUIRE(rep.has_value());
    CHECK(rep->core_indices == std::vector<std::size_t>{0});
    CHECK(rep->locally_minimal);
  }
  SECTION("solvable systems have no core") {
    System chain = gen_chain(3, 2);
    CHECK(!minimal_core(chain, WitnessKind::nontrivial).has_value());
  }
  SECTION("weak mode") {
    System s = parse_system("x + y = 0\nx - y = 0\n");
    auto rep = minimal_core(s, WitnessKind::weak);
    REQUIRE(rep.has_value());
    CHECK(rep->core_indices == std::vector<std::size_t>{0, 1});
    CHECK(!minimal_core(parse_system("x + y = 0\nx - y = 0\nz - w = 0\n"),
                        WitnessKind::weak)
               .has_value());  // weakly solvable
  }
}

TEST_CASE("cores are unsolvable and locally minimal (random)") {
  Rng rng(701);
  for (int trial = 0; trial < 120; ++trial) {
    System s = random_system(rng, 3, 5, -2, 2, 1);
    for (WitnessKind mode : {WitnessKind::nontrivial, WitnessKind::weak}) {
      auto rep = minimal_core(s, mode);
      if (!rep) {
        CHECK(is_solvable(s, mode));
        continue;
      }
      System core_sys = subsystem(s, rep->core_indices);
      CHECK(!is_solvable(core_sys, mode));
      for (std::size_t skip = 0; skip < rep->core_indices.size(); ++skip) {
        std::vector<std::size_t> smaller;
        for (std::size_t k = 0; k < rep->core_indices.size(); ++k)
          if (k != skip) smaller.push_back(rep->core_indices[k]);
        CHECK(is_solvable(subsystem(s, smaller), mode));
      }
    }
  }
}

TEST_CASE("min_unsolvable_size on fixed systems") {
  CHECK(min_unsolvable_size(parse_system("x + y = 0\nx - y = 0\n"),
                            WitnessKind::nontrivial) == 2);
  CHECK(min_unsolvable_size(parse_system("2*x = 0\n"), WitnessKind::nontrivial) == 1);
  CHECK(!min_unsolvable_size(gen_chain(5, 2), WitnessKind::nontrivial).has_value());
  // weak mode: the pair is the smallest weakly unsolvable subsystem too
  CHECK(min_unsolvable_size(parse_system("x + y = 0\nx - y = 0\n"),
                            WitnessKind::weak) == 2);
}

TEST_CASE("min_unsolvable_size respects the search bound") {
  System s = gen_chain(6, 2);
  CHECK_THROWS_AS(min_unsolvable_size(s, WitnessKind::nontrivial, 5),
                  search_bound_error);
  CHECK(!min_unsolvable_size(s, WitnessKind::nontrivial, 6).has_value());
}

TEST_CASE("min_unsolvable_size matches brute force and smallest cores") {
  Rng rng(702);
  for (int trial = 0; trial < 60; ++trial) {
    System s = random_system(rng, 3, 5, -2, 2, 1);
    for (WitnessKind mode : {WitnessKind::nontrivial, WitnessKind::weak}) {
      auto size = min_unsolvable_size(s, mode);
      auto brute = brute_min_size(s, mode);
      CHECK(size == brute);
      if (mode == WitnessKind::nontrivial && size) {
        // the global minimum is attained by some locally minimal core
        auto cores = all_minimal_cores(s, mode);
        std::size_t smallest = SIZE_MAX;
        for (const auto& c : cores) smallest = std::min(smallest, c.size());
        CHECK(*size == smallest);
      }
    }
  }
}

TEST_CASE("gen_chain") {
  CHECK(gen_chain(1, 2) == parse_system("x0 - 2*x1 = 0\n"));
  SECTION("length 3: witnesses carry three powers of p") {
    System s = gen_chain(3, 2);
    CHECK(s.equations.size() == 3);
    SolveReport rep = solve_nontrivial(s);
    REQUIRE(rep.status == SolveReport::Status::solvable);
    CHECK(*rep.witness->value_of("x0") % 8 == 0);
  }
  SECTION("substitution check for (9, 3, 1)") {
    System s = gen_chain(2, 3);
    Witness w{WitnessKind::nontrivial,
              {{"x0", Int(9)}, {"x1", Int(3)}, {"x2", Int(1)}}};
    CHECK(verify_witness(s, w));
  }
  CHECK_THROWS_AS(gen_chain(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_chain(3, 1), std::invalid_argument);
}

TEST_CASE("gen_from_presentation") {
  SECTION("Z/2 gives a weakly unsolvable single equation") {
    Presentation p = make_presentation(1, IntMatrix::from_rows({{Int(2)}}));
    System s = gen_from_presentation(p);
    CHECK(s == parse_system("2*x0 = 0\n"));
    CHECK(analyze(p).dual_rank == 0);
    CHECK(solve_weak(s).status == SolveReport::Status::unsolvable);
  }
  SECTION("the pair system is a size-2 compactness failure") {
    Presentation p = make_presentation(
        2, IntMatrix::from_rows({{Int(1), Int(1)}, {Int(1), Int(-1)}}));
    System s = gen_from_presentation(p);
    CHECK(solve_weak(s).status == SolveReport::Status::unsolvable);
    // every singleton subsystem is still nontrivially solvable
    CHECK(is_solvable(subsystem(s, {0}), WitnessKind::nontrivial));
    CHECK(is_solvable(subsystem(s, {1}), WitnessKind::nontrivial));
    CHECK(min_unsolvable_size(s, WitnessKind::weak) == 2);
  }
  SECTION("free presentations give solvable empty systems") {
    Presentation p = make_presentation(2, IntMatrix(0, 2));
    System s = gen_from_presentation(p);
    CHECK(s.equations.empty());
    CHECK(solve_weak(s).status == SolveReport::Status::solvable);
    CHECK(solve_nontrivial(s).status == SolveReport::Status::solvable);
  }
}

TEST_CASE("systems from trivial-dual presentations are weakly unsolvable") {
  Rng rng(703);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Presentation p = random_presentation(rng, 3, 4, -3, 3);
    if (analyze(p).dual_rank != 0) continue;
    ++found;
    CHECK(solve_weak(gen_from_presentation(p)).status ==
          SolveReport::Status::unsolvable);
  }
  CHECK(found > 20);  // the sample actually exercises the property
}
