#pragma once

#include "mine/types.hpp"

namespace mine {

enum class SortKey { first, second };

/// One variable pair as a point list ordered by one coordinate.
/// `order` keeps each point's pre-sort index so row labels computed in one
/// ordering can be carried into the other.
struct SortedPairs {
  Arr1D a;
  Arr1D b;
  Arr1I order;
  SortKey key = SortKey::first;

  Eigen::Index n() const { return a.size(); }
};

/// Sort by (a, b), stable. Ties on `a` are ordered by `b` so results are
/// reproducible bit-for-bit.
SortedPairs sort_by_first(const Arr1D& x, const Arr1D& y);

/// Sort by (b, a), stable.
SortedPairs sort_by_second(const Arr1D& x, const Arr1D& y);

/// Row map Q: 1-based row ordinal per point. Produced aligned with the
/// y-sorted order, where the ordinals are non-decreasing and contiguous;
/// reindex_to_first_order() permutes the ordinals into x-sorted order.
struct RowPartition {
  Arr1I assignment;
  int row_count = 0;
};

/// Column map P over the x-sorted order, plus cumulative point counts
/// c_0 = 0 < c_1 < ... < c_k = n at clump ends.
struct ColumnPartition {
  Arr1I assignment;
  int clump_count = 0;
  Arr1I boundaries;
};

/// Greedy equipartition of the y axis into at most `y` rows of near-equal
/// size. Points with equal second coordinate always share a row, so the
/// realized row_count can fall below the target. The running desired row
/// size is kept as a real number and a row is closed whenever adding the
/// next tie run would not bring its size strictly closer to the target.
RowPartition equipartition_y_axis(const SortedPairs& points, int y);

/// Permute a row map computed on the y-sorted order into the x-sorted order.
RowPartition reindex_to_first_order(const RowPartition& q,
                                    const SortedPairs& by_second,
                                    const SortedPairs& by_first);

/// Column partition into clumps: maximal runs of points that share a row,
/// with runs of equal first coordinate never split. Runs of equal `a`
/// spanning several rows are first fused under a fresh sentinel label; a
/// left-to-right scan then opens a new clump at every label change.
ColumnPartition get_clumps_partition(const SortedPairs& points, const RowPartition& q);

/// Clump partition capped at `k_hat` columns. When the clump count exceeds
/// the cap, the clump ordinals themselves are equipartitioned into at most
/// k_hat groups and the composed map is returned. The result never has more
/// than k_hat clumps.
ColumnPartition get_superclumps_partition(const SortedPairs& points, const RowPartition& q,
                                          int k_hat);

}  // namespace mine
