#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "gkverma/closedform.hpp"
#include "gkverma/tableaux.hpp"

namespace gkverma {

namespace {

// Independent certificates for the insertion shape: the first row is the
// longest weakly increasing subsequence, the row count the longest strictly
// decreasing one, and the first two rows together the best union of two
// disjoint weakly increasing subsequences.

long longest_weakly_increasing(const std::vector<Rational>& x) {
  std::vector<long> best(x.size(), 1);
  long result = x.empty() ? 0 : 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (x[j] <= x[i]) best[i] = std::max(best[i], best[j] + 1);
    result = std::max(result, best[i]);
  }
  return result;
}

long longest_strictly_decreasing(const std::vector<Rational>& x) {
  std::vector<long> best(x.size(), 1);
  long result = x.empty() ? 0 : 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (x[j] > x[i]) best[i] = std::max(best[i], best[j] + 1);
    result = std::max(result, best[i]);
  }
  return result;
}

// Exhaustive over all ways to color positions with {skip, first, second}.
long best_two_increasing_union(const std::vector<Rational>& x) {
  long total = 1;
  for (std::size_t i = 0; i < x.size(); ++i) total *= 3;
  long best = 0;
  for (long mask = 0; mask < total; ++mask) {
    long code = mask;
    std::vector<Rational> a, b;
    bool ok = true;
    for (const Rational& value : x) {
      const int color = code % 3;
      code /= 3;
      if (color == 1) {
        ok = ok && (a.empty() || a.back() <= value);
        a.push_back(value);
      } else if (color == 2) {
        ok = ok && (b.empty() || b.back() <= value);
        b.push_back(value);
      }
      if (!ok) break;
    }
    if (ok) best = std::max<long>(best, a.size() + b.size());
  }
  return best;
}

std::vector<Rational> random_sequence(std::mt19937& gen, int length) {
  std::uniform_int_distribution<int> numerator(-5, 5);
  std::uniform_int_distribution<int> denominator(1, 2);
  std::vector<Rational> x;
  for (int i = 0; i < length; ++i) x.emplace_back(numerator(gen), denominator(gen));
  return x;
}

std::vector<Rational> strictly_decreasing_block(std::mt19937& gen, int length) {
  std::uniform_int_distribution<int> start(-4, 8);
  std::uniform_int_distribution<int> gap(1, 3);
  std::vector<Rational> block;
  int value = start(gen);
  for (int i = 0; i < length; ++i) {
    block.emplace_back(value);
    value -= gap(gen);
  }
  return block;
}

}  // namespace

TEST_CASE("insertion shape carries the subsequence certificates", "[properties]") {
  std::mt19937 gen(20240811);
  std::uniform_int_distribution<int> length(0, 28);
  for (int round = 0; round < 400; ++round) {
    const std::vector<Rational> x = random_sequence(gen, length(gen));
    const Partition shape = rs_shape(x);
    CAPTURE(round, x.size());
    CHECK((shape.rows.empty() ? 0 : shape.rows[0]) == longest_weakly_increasing(x));
    CHECK(static_cast<long>(shape.rows.size()) == longest_strictly_decreasing(x));
  }
}

TEST_CASE("first two rows solve the two-subsequence problem", "[properties]") {
  std::mt19937 gen(20240812);
  std::uniform_int_distribution<int> length(0, 9);
  for (int round = 0; round < 120; ++round) {
    const std::vector<Rational> x = random_sequence(gen, length(gen));
    const Partition shape = rs_shape(x);
    const long two_rows = (shape.rows.empty() ? 0 : shape.rows[0]) +
                          (shape.rows.size() > 1 ? shape.rows[1] : 0);
    CAPTURE(round, x.size());
    CHECK(two_rows == best_two_increasing_union(x));
  }
}

TEST_CASE("shape is invariant under increasing affine maps", "[properties]") {
  std::mt19937 gen(20240813);
  std::uniform_int_distribution<int> length(1, 20);
  for (int round = 0; round < 120; ++round) {
    const std::vector<Rational> x = random_sequence(gen, length(gen));
    std::vector<Rational> mapped;
    const Rational scale(1 + round % 5, 2);
    const Rational shift(round % 7 - 3, 3);
    for (const Rational& value : x) mapped.push_back(scale * value + shift);
    CHECK(rs_shape(x) == rs_shape(mapped));
  }
}

TEST_CASE("parity counts partition the diagram", "[properties]") {
  std::mt19937 gen(20240814);
  std::uniform_int_distribution<int> length(1, 25);
  for (int round = 0; round < 200; ++round) {
    const std::vector<Rational> x = random_sequence(gen, length(gen));
    const Partition shape = rs_shape(x);
    CHECK(dual_partition(dual_partition(shape)) == shape);
    const RowParityCounts counts = row_parity_counts(shape);
    long ev = 0, odd = 0;
    for (std::size_t i = 0; i < shape.rows.size(); ++i) {
      CHECK(counts.ev[i] + counts.odd[i] == shape.rows[i]);
      ev += counts.ev[i];
      odd += counts.odd[i];
    }
    CHECK(ev + odd == shape.box_count());
    CHECK(g_odd(x) + g_ev(x) == f_a(x));
  }
}

TEST_CASE("scalar GK dimension is bounded and monotone", "[properties]") {
  for (LieType type : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = type == LieType::D ? 3 : 2; n <= 6; ++n) {
      const LieAlgebra algebra(type, n);
      for (int p = 1; p <= algebra.rank(); ++p) {
        const ParabolicChoice choice(algebra, p);
        const long dim_u = dim_nilradical(choice);
        for (Rational z(-3 * n); z <= n; z += Rational(1, 2)) {
          const long at = gkdim_scalar(choice, z);
          const long above = gkdim_scalar(choice, z + 1);
          CAPTURE(static_cast<int>(type), n, p, format_rational(z));
          CHECK(at >= 0);
          CHECK(at <= dim_u);
          CHECK(above <= at);
        }
      }
    }
}

TEST_CASE("off-lattice parameters stay irreducible", "[properties]") {
  for (LieType type : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = type == LieType::D ? 3 : 2; n <= 6; ++n) {
      const LieAlgebra algebra(type, n);
      for (int p = 1; p <= algebra.rank(); ++p) {
        const ParabolicChoice choice(algebra, p);
        for (const Rational& z : {Rational(1, 3), Rational(1, 5), Rational(-7, 3)}) {
          CHECK(gkdim_scalar(choice, z) == dim_nilradical(choice));
          CHECK_FALSE(is_reducible(choice, z));
          CHECK_FALSE(reducibility_set(choice).contains(z));
        }
      }
    }
}

TEST_CASE("pointwise criterion matches the closed-form set", "[properties]") {
  for (LieType type : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = type == LieType::D ? 3 : 2; n <= 7; ++n) {
      const LieAlgebra algebra(type, n);
      for (int p = 1; p <= algebra.rank(); ++p) {
        const ParabolicChoice choice(algebra, p);
        const ReducibilitySet set = reducibility_set(choice);
        for (Rational z(-3 * n); z <= n; z += Rational(1, 2)) {
          CAPTURE(static_cast<int>(type), n, p, format_rational(z));
          CHECK(is_reducible(choice, z) == set.contains(z));
        }
      }
    }
}

TEST_CASE("both realizations of the D fork agree", "[properties]") {
  for (int n = 4; n <= 7; ++n) {
    const ParabolicChoice choice(LieAlgebra(LieType::D, n), n - 1);
    for (Rational z(-3 * n); z <= 2; z += Rational(1, 2)) {
      CAPTURE(n, format_rational(z));
      CHECK(gkdim_scalar(choice, z, DRealization::half_ones) ==
            gkdim_scalar(choice, z, DRealization::standard));
    }
  }
}

TEST_CASE("integral fast path agrees with the general algorithm", "[properties]") {
  std::mt19937 gen(20240815);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (LieType type : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = type == LieType::D ? 3 : 2; n <= 8; ++n) {
      const LieAlgebra algebra(type, n);
      for (int round = 0; round < 40; ++round) {
        Weight weight(algebra.coord_length());
        const bool half = round % 2 == 1;
        for (Rational& value : weight) {
          value = entry(gen);
          if (half) value += Rational(1, 2);
        }
        CAPTURE(static_cast<int>(type), n, round);
        CHECK(gkdim_integral(algebra, weight) == gkdim_general(algebra, weight));
      }
    }
}

TEST_CASE("block-dominant type A weights obey the two-column law", "[properties]") {
  std::mt19937 gen(20240816);
  for (int n = 2; n <= 8; ++n) {
    const LieAlgebra algebra(LieType::A, n);
    for (int p = 1; p <= n - 1; ++p) {
      for (int round = 0; round < 20; ++round) {
        Weight weight = strictly_decreasing_block(gen, p);
        const Weight tail = strictly_decreasing_block(gen, n - p);
        weight.insert(weight.end(), tail.begin(), tail.end());
        CAPTURE(n, p, round);
        if (round % 2 == 0) {
          const Partition columns = dual_partition(rs_shape(weight));
          CHECK(columns.rows.size() <= 2);
          const long m = columns.rows.size() > 1 ? columns.rows[1] : 0;
          CHECK(gkdim_general(algebra, weight) == m * (n - m));
        } else {
          for (int i = 0; i < p; ++i) weight[i] += Rational(1, 3);
          CHECK(gkdim_general(algebra, weight) == static_cast<long>(p) * (n - p));
        }
      }
    }
  }
}

}  // namespace gkverma
