#pragma once

#include <string>

#include "qspec/errors.hpp"

namespace qspec {

namespace detail {

// Fills rows[r][c] column by column, each entry ranging over
// [rows[r-1][c+1], rows[r-1][c]] in increasing order.
template <typename Visitor>
void extend_pattern(GTPattern& pattern, std::size_t row, std::size_t col, std::uint64_t& count,
                    const OracleLimits& limits, Visitor& visit) {
  auto& rows = pattern.rows;
  if (row == rows.size()) {
    if (++count > limits.max_patterns)
      throw ResourceError("Gelfand-Tsetlin enumeration exceeded " + std::to_string(limits.max_patterns) +
                          " patterns");
    visit(static_cast<const GTPattern&>(pattern));
    return;
  }
  if (col == rows[row].size()) {
    extend_pattern(pattern, row + 1, 0, count, limits, visit);
    return;
  }
  const auto& above = rows[row - 1];
  for (auto v = above[col + 1]; v <= above[col]; ++v) {
    rows[row][col] = v;
    extend_pattern(pattern, row, col + 1, count, limits, visit);
  }
}

}  // namespace detail

template <typename Visitor>
void for_each_gt_pattern(const Partition& top, const OracleLimits& limits, Visitor&& visit) {
  const auto& parts = top.parts();
  GTPattern pattern;
  pattern.rows.reserve(parts.size());
  pattern.rows.push_back(parts);
  for (std::size_t len = parts.size() - 1; len >= 1; --len) pattern.rows.emplace_back(len, 0);
  std::uint64_t count = 0;
  detail::extend_pattern(pattern, 1, 0, count, limits, visit);
}

}  // namespace qspec
