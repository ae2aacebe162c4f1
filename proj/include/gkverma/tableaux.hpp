#pragma once

#include <span>
#include <vector>

#include "gkverma/rational.hpp"

namespace gkverma {

// Young diagram shape: weakly decreasing positive row lengths.
struct Partition {
  std::vector<long> rows;

  Partition() = default;
  explicit Partition(std::vector<long> rows);

  long box_count() const;

  bool operator==(const Partition&) const = default;
};

// Shape of the row insertion tableau of x.  An incoming value bumps the
// leftmost entry *strictly* greater than it, so rows end up weakly
// increasing and repeated values accumulate within a row.
Partition rs_shape(std::span<const Rational> x);

// Transpose: column lengths of the diagram.
Partition dual_partition(const Partition& shape);

// Checkerboard counts: box (k, l) is even when k + l is.  Row k of length m
// therefore holds ceil(m/2) even boxes when k is odd and floor(m/2) when k
// is even (1-based row numbering), with the odd boxes making up the rest.
struct RowParityCounts {
  std::vector<long> ev;
  std::vector<long> odd;
};

RowParityCounts row_parity_counts(const Partition& shape);

// Row-index-weighted box counts of rs_shape(x): with rows numbered from 1,
// each box in row k weighs k - 1.  f_a counts every box, g_odd and g_ev
// only the odd respectively even ones.
long f_a(std::span<const Rational> x);
long g_odd(std::span<const Rational> x);
long g_ev(std::span<const Rational> x);

}  // namespace gkverma
