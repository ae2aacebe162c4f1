#include "gkverma/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace gkverma {

Partition::Partition(std::vector<long> rows_in) : rows(std::move(rows_in)) {
  for (size_t k = 0; k < rows.size(); ++k)
    if (rows[k] <= 0 || (k > 0 && rows[k] > rows[k - 1]))
      throw std::domain_error("partition rows must be positive and weakly decreasing");
}

long Partition::box_count() const { return std::accumulate(rows.begin(), rows.end(), 0L); }

Partition rs_shape(std::span<const Rational> x) {
  std::vector<std::vector<Rational>> tableau;
  for (const Rational& value : x) {
    Rational carry = value;
    size_t k = 0;
    while (true) {
      if (k == tableau.size()) {
        tableau.push_back({std::move(carry)});
        break;
      }
      auto& row = tableau[k];
      const auto bump = std::upper_bound(row.begin(), row.end(), carry);
      if (bump == row.end()) {
        row.push_back(std::move(carry));
        break;
      }
      std::swap(*bump, carry);
      ++k;
    }
  }
  std::vector<long> rows(tableau.size());
  for (size_t k = 0; k < tableau.size(); ++k) rows[k] = static_cast<long>(tableau[k].size());
  return Partition(std::move(rows));
}

Partition dual_partition(const Partition& shape) {
  if (shape.rows.empty()) return {};
  std::vector<long> columns(static_cast<size_t>(shape.rows.front()), 0);
  for (long row : shape.rows)
    for (long c = 0; c < row; ++c) ++columns[static_cast<size_t>(c)];
  return Partition(std::move(columns));
}

RowParityCounts row_parity_counts(const Partition& shape) {
  RowParityCounts counts;
  counts.ev.reserve(shape.rows.size());
  counts.odd.reserve(shape.rows.size());
  for (size_t k = 0; k < shape.rows.size(); ++k) {
    const long row = shape.rows[k];
    const long ev = k % 2 == 0 ? (row + 1) / 2 : row / 2;  // k is the 0-based index
    counts.ev.push_back(ev);
    counts.odd.push_back(row - ev);
  }
  return counts;
}

namespace {

long weighted_boxes(const std::vector<long>& per_row) {
  long total = 0;
  for (size_t k = 0; k < per_row.size(); ++k) total += static_cast<long>(k) * per_row[k];
  return total;
}

}  // namespace

long f_a(std::span<const Rational> x) { return weighted_boxes(rs_shape(x).rows); }

long g_odd(std::span<const Rational> x) { return weighted_boxes(row_parity_counts(rs_shape(x)).odd); }

long g_ev(std::span<const Rational> x) { return weighted_boxes(row_parity_counts(rs_shape(x)).ev); }

}  // namespace gkverma
