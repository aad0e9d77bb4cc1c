#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "zls/system.hpp"

using namespace zls;
using namespace zls::testing;

TEST_CASE("parsing single equations") {
  System s = parse_system("x0 - 2*x1 = 0\n");
  REQUIRE(s.variables == std::vector<std::string>{"x0", "x1"});
  REQUIRE(s.equations.size() == 1);
  CHECK(s.equations[0].terms ==
        std::vector<std::pair<std::size_t, Int>>{{0, Int(1)}, {1, Int(-2)}});
}

TEST_CASE("parsing multiple equations and first-appearance order") {
  System s = parse_system("x + y = 0\nx - y = 0");
  CHECK(s.variables == std::vector<std::string>{"x", "y"});
  CHECK(s.equations.size() == 2);
}

TEST_CASE("nonhomogeneous right-hand sides are rejected") {
  try {
    parse_system("2*x = 5\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("nonhomogeneous") != std::string::npos);
  }
  CHECK_NOTHROW(parse_system("2*x = -0\n"));
}

TEST_CASE("syntax errors carry line and column") {
  CHECK_THROWS_AS(parse_system("x +\n"), parse_error);
  CHECK_THROWS_AS(parse_system("= 0\n"), parse_error);
  CHECK_THROWS_AS(parse_system("2x = 0\n"), parse_error);  // missing '*'
  CHECK_THROWS_AS(parse_system("x y = 0\n"), parse_error);
  CHECK_THROWS_AS(parse_system("x = 0 junk\n"), parse_error);
  CHECK_THROWS_AS(parse_system("x = y\n"), parse_error);
  try {
    parse_system("x + y = 0\nx - = 0\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 4);
  }
}

TEST_CASE("vars header fixes order and retains unused variables") {
  System s = parse_system("vars: a b c\nb - a = 0\n");
  CHECK(s.variables == std::vector<std::string>{"a", "b", "c"});
  auto mask = appearing_mask(s);
  CHECK(mask == std::vector<bool>{true, true, false});

  // variables not declared in the header are appended on first appearance
  System t = parse_system("vars: a\na + d = 0\n");
  CHECK(t.variables == std::vector<std::string>{"a", "d"});

  CHECK_THROWS_AS(parse_system("vars: a a\n"), parse_error);
  CHECK_THROWS_AS(parse_system("x = 0\nvars: x\n"), parse_error);
}

TEST_CASE("normalization merges terms and drops zero equations") {
  std::vector<std::string> warnings;
  System s = parse_system("x + x = 0\nx - x = 0\n# comment\n\n", &warnings);
  REQUIRE(s.equations.size() == 1);
  CHECK(s.equations[0].terms ==
        std::vector<std::pair<std::size_t, Int>>{{0, Int(2)}});
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("0 = 0") != std::string::npos);
}

TEST_CASE("comments, blank lines, CRLF") {
  System a = parse_system("# heading\r\nx - y = 0  # trailing\r\n\r\n");
  System b = parse_system("x - y = 0\n");
  CHECK(a == b);
}

TEST_CASE("serialize then parse is the identity on normalized systems") {
  System s = parse_system("vars: x y z w\n2*x - y = 0\nx + y + z = 0\n");
  CHECK(parse_system(serialize_system(s)) == s);
  CHECK(serialize_system(s) ==
        "vars: x y z w\n2*x - y = 0\nx + y + z = 0\n");

  Rng rng(301);
  for (int trial = 0; trial < 200; ++trial) {
    System r = random_system(rng, 4, 4, -9, 9);
    CHECK(parse_system(serialize_system(r)) == r);
  }
}

TEST_CASE("normalization is idempotent") {
  Rng rng(302);
  for (int trial = 0; trial < 100; ++trial) {
    System r = random_system(rng, 4, 4, -3, 3);
    System once = parse_system(serialize_system(r));
    System twice = parse_system(serialize_system(once));
    CHECK(once == twice);
  }
}

TEST_CASE("coefficient matrix") {
  System s = parse_system("x - 2*y = 0\n");
  auto [m, order] = coefficient_matrix(s);
  CHECK(m == IntMatrix::from_rows({{Int(1), Int(-2)}}));
  CHECK(order == std::vector<std::string>{"x", "y"});

  System empty = parse_system("vars: x\n");
  auto [m2, order2] = coefficient_matrix(empty);
  CHECK(m2.rows() == 0);
  CHECK(m2.cols() == 1);

  System two = parse_system("x + y = 0\nx - y = 0\n");
  auto [m3, o3] = coefficient_matrix(two);
  CHECK(m3 == IntMatrix::from_rows({{Int(1), Int(1)}, {Int(1), Int(-1)}}));
}

TEST_CASE("subsystem extraction") {
  System s = parse_system("x + y = 0\nx - y = 0\nz - w = 0\n");
  SECTION("single equation keeps only its variables") {
    System t = subsystem(s, {2});
    CHECK(t.variables == std::vector<std::string>{"z", "w"});
    CHECK(t == parse_system("z - w = 0\n"));
  }
  SECTION("all indices") {
    System t = subsystem(s, {0, 1, 2});
    CHECK(t == s);
  }
  SECTION("empty index set gives the empty system") {
    System t = subsystem(s, {});
    CHECK(t.variables.empty());
    CHECK(t.equations.empty());
  }
  SECTION("declared-but-unused variables are pruned") {
    System u = parse_system("vars: x y z\nx - y = 0\n");
    System t = subsystem(u, {0});
    CHECK(t.variables == std::vector<std::string>{"x", "y"});
  }
  CHECK_THROWS_AS(subsystem(s, {3}), std::out_of_range);
}

TEST_CASE("subsystem coefficient matrix is the row/column restriction") {
  Rng rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    System s = random_system(rng, 4, 5, -3, 3, 1);
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < s.equations.size(); ++i)
      if (rand_int(rng, 0, 1)) indices.push_back(i);
    System t = subsystem(s, indices);
    auto [mt, ot] = coefficient_matrix(t);
    auto [ms, os] = coefficient_matrix(s);
    // map t's variables back to s's columns
    std::vector<std::size_t> colmap;
    for (const auto& name : ot)
      colmap.push_back(static_cast<std::size_t>(
          std::find(os.begin(), os.end(), name) - os.begin()));
    REQUIRE(mt.rows() == indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
      for (std::size_t j = 0; j < colmap.size(); ++j)
        CHECK(mt(i, j) == ms(indices[i], colmap[j]));
  }
}

TEST_CASE("duplicate equations are retained") {
  System s = parse_system("x - y = 0\nx - y = 0\n");
  CHECK(s.equations.size() == 2);
  CHECK(s.equations[0] == s.equations[1]);
}

TEST_CASE("witness verification") {
  System s = parse_system("x - 2*y = 0\n");
  Witness good{WitnessKind::nontrivial, {{"x", Int(2)}, {"y", Int(1)}}};
  CHECK(verify_witness(s, good));
  Witness zero{WitnessKind::nontrivial, {{"x", Int(0)}, {"y", Int(0)}}};
  CHECK(!verify_witness(s, zero));  // satisfies the equation but hits zero
  Witness weak_zero{WitnessKind::weak, {{"x", Int(0)}, {"y", Int(0)}}};
  CHECK(!verify_witness(s, weak_zero));
  Witness wrong{WitnessKind::nontrivial, {{"x", Int(1)}, {"y", Int(1)}}};
  CHECK(!verify_witness(s, wrong));
  Witness partial{WitnessKind::nontrivial, {{"x", Int(2)}}};
  CHECK(!verify_witness(s, partial));

  System empty = parse_system("vars: x\n");
  Witness conv{WitnessKind::weak, {{"x", Int(0)}}};
  CHECK(verify_witness(empty, conv));  // no equations: anything goes
}
