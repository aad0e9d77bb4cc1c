#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "zls/normal_form.hpp"

using namespace zls;
using namespace zls::testing;

TEST_CASE("hnf on fixed inputs") {
  SECTION("identity") {
    HnfResult r = hnf(IntMatrix::identity(2));
    CHECK(r.H == IntMatrix::identity(2));
    CHECK(r.rank == 2);
  }
  SECTION("[[2,3],[4,5]]") {
    IntMatrix m = IntMatrix::from_rows({{Int(2), Int(3)}, {Int(4), Int(5)}});
    HnfResult r = hnf(m);
    CHECK(r.H == IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(1)}}));
    CHECK(r.rank == 2);
    // lattice index preserved: product of pivots = |det M| = 2
    CHECK(r.H(0, 0) * r.H(1, 1) == abs_int(determinant(m)));
    CHECK(r.U * m == r.H);
    CHECK(is_unimodular(r.U));
  }
  SECTION("zero matrix") {
    HnfResult r = hnf(IntMatrix(2, 2));
    CHECK(r.H == IntMatrix(2, 2));
    CHECK(r.rank == 0);
  }
  SECTION("wide and tall shapes keep their shape") {
    CHECK(hnf(IntMatrix(2, 5)).H.rows() == 2);
    CHECK(hnf(IntMatrix(5, 2)).H.rows() == 5);
    CHECK(hnf(IntMatrix(0, 3)).rank == 0);
    CHECK(hnf(IntMatrix(3, 0)).rank == 0);
  }
}

TEST_CASE("hnf invariants on random matrices") {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + trial % 5, 1 + (trial / 3) % 5, -9, 9);
    HnfResult r = hnf(m);
    CHECK(r.U * m == r.H);
    CHECK(is_unimodular(r.U));
    CHECK(hnf_shape_ok(r.H, r.rank));
    // row lattice of H equals row lattice of M: H = U*M gives one inclusion,
    // reduction of M's rows against H gives the other
    for (std::size_t i = 0; i < m.rows(); ++i)
      CHECK(detail::echelon_member(m.row(i), r.H, r.rank));
  }
}

TEST_CASE("hnf idempotence") {
  Rng rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + trial % 4, 1 + (trial / 2) % 4, -9, 9);
    IntMatrix h = hnf(m).H;
    CHECK(hnf(h).H == h);
  }
}

TEST_CASE("snf on fixed inputs") {
  SECTION("diag(2,3) has invariant factors 1, 6") {
    IntMatrix m = IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(3)}});
    SnfResult r = snf(m);
    CHECK(r.D == IntMatrix::from_rows({{Int(1), Int(0)}, {Int(0), Int(6)}}));
    CHECK(r.invariant_factors == std::vector<Int>{1, 6});
    // d1 = gcd of entries, d1*d2 = |det|
    CHECK(r.invariant_factors[0] == 1);
    CHECK(r.invariant_factors[0] * r.invariant_factors[1] == abs_int(determinant(m)));
    CHECK(r.U * m * r.V == r.D);
    CHECK(is_unimodular(r.U));
    CHECK(is_unimodular(r.V));
  }
  SECTION("[[2,4],[6,8]] gives diag(2,4)") {
    IntMatrix m = IntMatrix::from_rows({{Int(2), Int(4)}, {Int(6), Int(8)}});
    SnfResult r = snf(m);
    CHECK(r.D == IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(4)}}));
    CHECK(r.invariant_factors == std::vector<Int>{2, 4});
    CHECK(r.invariant_factors[0] == 2);  // gcd of the entries
    CHECK(r.invariant_factors[0] * r.invariant_factors[1] == abs_int(determinant(m)));
  }
  SECTION("zero matrix") {
    SnfResult r = snf(IntMatrix(3, 2));
    CHECK(r.D == IntMatrix(3, 2));
    CHECK(r.invariant_factors.empty());
  }
}

TEST_CASE("snf invariants on random matrices") {
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + trial % 6, 1 + (trial / 4) % 6, -9, 9);
    SnfResult r = snf(m);
    CHECK(r.U * m * r.V == r.D);
    CHECK(is_unimodular(r.U));
    CHECK(is_unimodular(r.V));
    CHECK(divisibility_chain_ok(r.invariant_factors));
    // D diagonal, trailing zeros after the first zero
    bool seen_zero = false;
    for (std::size_t i = 0; i < r.D.rows(); ++i)
      for (std::size_t j = 0; j < r.D.cols(); ++j) {
        if (i != j) CHECK(r.D(i, j) == 0);
        if (i == j) {
          if (r.D(i, j) == 0) seen_zero = true;
          else CHECK(!seen_zero);
        }
      }
  }
}

TEST_CASE("invariant factor products match minor gcds") {
  // product of the first k invariant factors equals the gcd of all k x k
  // minors; checked by direct minor enumeration
  Rng rng(104);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + trial % 4, 1 + (trial / 2) % 4, -6, 6);
    SnfResult r = snf(m);
    Int prod = 1;
    for (std::size_t k = 0; k < r.invariant_factors.size(); ++k) {
      prod *= r.invariant_factors[k];
      CHECK(prod == minor_gcd(m, k + 1));
    }
    // one past the rank: all minors vanish (when the shape allows it)
    std::size_t past = r.invariant_factors.size() + 1;
    if (past <= std::min(m.rows(), m.cols())) CHECK(minor_gcd(m, past) == 0);
  }
}
