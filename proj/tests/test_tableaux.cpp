#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "gkverma/tableaux.hpp"

namespace gkverma {

namespace {

Partition shape_of(std::initializer_list<Rational> values) {
  return rs_shape(std::vector<Rational>(values));
}

}  // namespace

TEST_CASE("partition validation", "[tableaux]") {
  CHECK(Partition({3, 3, 1}).box_count() == 7);
  CHECK(Partition{}.box_count() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::domain_error);
  CHECK_THROWS_AS(Partition({2, 0}), std::domain_error);
  CHECK_THROWS_AS(Partition({-1}), std::domain_error);
}

TEST_CASE("insertion shape of small sequences", "[tableaux]") {
  CHECK(shape_of({2, 0, 3, 1}) == Partition({2, 2}));
  CHECK(shape_of({}) == Partition{});
  CHECK(shape_of({5}) == Partition({1}));
  // weakly increasing input sits in one row
  CHECK(shape_of({0, 1, 1, 4}) == Partition({4}));
  // strictly decreasing input stacks into one column
  CHECK(shape_of({4, 3, 2, 1}) == Partition({1, 1, 1, 1}));
  // repeats accumulate inside a row: bumping is by *strictly* greater
  CHECK(shape_of({1, 1, 1}) == Partition({3}));
  CHECK(shape_of({1, 1, 0, 1}) == Partition({3, 1}));
  CHECK(shape_of({Rational(3, 2), Rational(1, 2), Rational(1, 2)}) == Partition({2, 1}));
}

TEST_CASE("dual partition transposes", "[tableaux]") {
  CHECK(dual_partition(Partition({3, 3, 1, 1})) == Partition({4, 2, 2}));
  CHECK(dual_partition(Partition({1})) == Partition({1}));
  CHECK(dual_partition(Partition{}) == Partition{});
  // involution
  for (const Partition& shape :
       {Partition({5, 3, 3, 2}), Partition({2, 2}), Partition({7, 1, 1, 1, 1})})
    CHECK(dual_partition(dual_partition(shape)) == shape);
}

TEST_CASE("checkerboard parity counts", "[tableaux]") {
  // rows alternate starting parity: row 1 starts even, row 2 starts odd
  const RowParityCounts counts = row_parity_counts(Partition({3, 3, 1, 1}));
  CHECK(counts.ev == std::vector<long>{2, 1, 1, 0});
  CHECK(counts.odd == std::vector<long>{1, 2, 0, 1});
}

TEST_CASE("weighted box counts", "[tableaux]") {
  // (3/2, 1/2, -1/2, 1/2, -1/2, 1/2, -1/2, -3/2) inserts to (3,3,1,1)
  const std::vector<Rational> x = {Rational(3, 2),  Rational(1, 2), Rational(-1, 2),
                                   Rational(1, 2),  Rational(-1, 2), Rational(1, 2),
                                   Rational(-1, 2), Rational(-3, 2)};
  CHECK(rs_shape(x) == Partition({3, 3, 1, 1}));
  CHECK(f_a(x) == 0 * 3 + 1 * 3 + 2 * 1 + 3 * 1);
  CHECK(g_odd(x) == 0 * 1 + 1 * 2 + 2 * 0 + 3 * 1);
  CHECK(g_ev(x) == 0 * 2 + 1 * 1 + 2 * 1 + 3 * 0);
  CHECK(g_odd(x) + g_ev(x) == f_a(x));
}

}  // namespace gkverma
