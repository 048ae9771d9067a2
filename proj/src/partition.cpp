#include "mine/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mine {

namespace {

SortedPairs sort_pairs(const Arr1D& x, const Arr1D& y, SortKey key) {
  if (x.size() != y.size()) throw std::invalid_argument("sort_pairs: input lengths differ");
  const Eigen::Index n = x.size();
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  if (key == SortKey::first) {
    std::stable_sort(idx.begin(), idx.end(), [&](int l, int r) {
      return x[l] != x[r] ? x[l] < x[r] : y[l] < y[r];
    });
  } else {
    std::stable_sort(idx.begin(), idx.end(), [&](int l, int r) {
      return y[l] != y[r] ? y[l] < y[r] : x[l] < x[r];
    });
  }
  SortedPairs out;
  out.a.resize(n);
  out.b.resize(n);
  out.order.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.a[i] = x[idx[static_cast<std::size_t>(i)]];
    out.b[i] = y[idx[static_cast<std::size_t>(i)]];
    out.order[i] = idx[static_cast<std::size_t>(i)];
  }
  out.key = key;
  return out;
}

// Greedy tie-run scan shared by the public equipartition and the superclump
// coarsening; the latter may legitimately ask for a single row.
RowPartition equipartition_runs(const Arr1D& values, int rows) {
  const int n = static_cast<int>(values.size());
  RowPartition out;
  out.assignment.resize(n);
  double desired = static_cast<double>(n) / static_cast<double>(rows);
  int curr = 1;
  int in_row = 0;
  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && values[j] == values[i]) ++j;
    const int run = j - i;
    if (in_row != 0 && std::abs(static_cast<double>(in_row + run) - desired) >=
                           std::abs(static_cast<double>(in_row) - desired)) {
      ++curr;
      in_row = 0;
      // n - i points remain once the current row is sealed.
      desired = static_cast<double>(n - i) / static_cast<double>(rows - curr + 1);
    }
    for (int t = i; t < j; ++t) out.assignment[t] = curr;
    in_row += run;
    i = j;
  }
  out.row_count = curr;
  return out;
}

Arr1I boundaries_from_assignment(const Arr1I& assignment, int k) {
  Arr1I bounds = Arr1I::Zero(k + 1);
  for (Eigen::Index i = 0; i < assignment.size(); ++i) bounds[assignment[i]] += 1;
  for (int j = 1; j <= k; ++j) bounds[j] += bounds[j - 1];
  return bounds;
}

}  // namespace

SortedPairs sort_by_first(const Arr1D& x, const Arr1D& y) {
  return sort_pairs(x, y, SortKey::first);
}

SortedPairs sort_by_second(const Arr1D& x, const Arr1D& y) {
  return sort_pairs(x, y, SortKey::second);
}

RowPartition equipartition_y_axis(const SortedPairs& points, int y) {
  if (points.n() < 2) throw std::invalid_argument("equipartition_y_axis: need at least 2 points");
  if (y < 2) throw std::invalid_argument("equipartition_y_axis: row target must be >= 2");
  if (points.key != SortKey::second)
    throw std::invalid_argument("equipartition_y_axis: points must be sorted by second coordinate");
  return equipartition_runs(points.b, y);
}

RowPartition reindex_to_first_order(const RowPartition& q, const SortedPairs& by_second,
                                    const SortedPairs& by_first) {
  const Eigen::Index n = by_second.n();
  if (q.assignment.size() != n || by_first.n() != n)
    throw std::invalid_argument("reindex_to_first_order: misaligned inputs");
  Arr1I per_point(n);
  for (Eigen::Index i = 0; i < n; ++i) per_point[by_second.order[i]] = q.assignment[i];
  RowPartition out;
  out.assignment.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) out.assignment[i] = per_point[by_first.order[i]];
  out.row_count = q.row_count;
  return out;
}

ColumnPartition get_clumps_partition(const SortedPairs& points, const RowPartition& q) {
  const Eigen::Index n = points.n();
  if (q.assignment.size() != n)
    throw std::invalid_argument("get_clumps_partition: row map misaligned with points");
  if (n < 1) throw std::invalid_argument("get_clumps_partition: empty input");
  if (points.key != SortKey::first)
    throw std::invalid_argument("get_clumps_partition: points must be sorted by first coordinate");

  // Runs of equal `a` spanning several rows are fused under one fresh
  // sentinel so the scan below cannot split them.
  Arr1I labels = q.assignment;
  int sentinel = -1;
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index j = i + 1;
    bool spans_rows = false;
    while (j < n && points.a[j] == points.a[i]) {
      if (labels[j] != labels[i]) spans_rows = true;
      ++j;
    }
    if (spans_rows) {
      for (Eigen::Index t = i; t < j; ++t) labels[t] = sentinel;
      --sentinel;
    }
    i = j;
  }

  ColumnPartition out;
  out.assignment.resize(n);
  out.assignment[0] = 1;
  int k = 1;
  for (Eigen::Index t = 1; t < n; ++t) {
    if (labels[t] != labels[t - 1]) ++k;
    out.assignment[t] = k;
  }
  out.clump_count = k;
  out.boundaries = boundaries_from_assignment(out.assignment, k);
  return out;
}

ColumnPartition get_superclumps_partition(const SortedPairs& points, const RowPartition& q,
                                          int k_hat) {
  if (k_hat < 1)
    throw std::invalid_argument("get_superclumps_partition: clump budget must be >= 1");
  ColumnPartition clumps = get_clumps_partition(points, q);
  if (clumps.clump_count <= k_hat) return clumps;

  // Equipartition the clump ordinals. Each clump is one tie run and the
  // ordinals are already ascending, so the run assignment is the composed
  // map itself.
  const Arr1D ordinals = clumps.assignment.cast<double>();
  const RowPartition coarse = equipartition_runs(ordinals, k_hat);
  ColumnPartition out;
  out.assignment = coarse.assignment;
  out.clump_count = coarse.row_count;
  out.boundaries = boundaries_from_assignment(out.assignment, out.clump_count);
  return out;
}

}  // namespace mine
