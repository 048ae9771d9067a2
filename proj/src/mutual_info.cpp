#include "mine/mutual_info.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mine {

CellCounts build_cell_counts(const SortedPairs& points, const RowPartition& q,
                             const ColumnPartition& p) {
  const Eigen::Index n = points.n();
  if (q.assignment.size() != n || p.assignment.size() != n)
    throw std::invalid_argument("build_cell_counts: partition maps misaligned with points");
  const int rows = q.row_count;
  const int k = p.clump_count;
  CellCounts out;
  out.counts = Mat2I::Zero(rows, k);
  for (Eigen::Index i = 0; i < n; ++i) out.counts(q.assignment[i] - 1, p.assignment[i] - 1) += 1;
  out.cumulative = Mat2I::Zero(rows, k + 1);
  for (int j = 0; j < k; ++j)
    out.cumulative.col(j + 1) = out.cumulative.col(j) + out.counts.col(j);
  out.boundaries = p.boundaries;
  return out;
}

MiProfile optimize_x_axis(const CellCounts& cells, int x) {
  if (x < 2) throw std::invalid_argument("optimize_x_axis: column target must be >= 2");
  const int k = cells.clumps();

  MiProfile out;
  out.values = Arr1D::Zero(x - 1);
  const Mat2D cum = cells.cumulative.cast<double>();
  out.h_q = entropy(cum.col(k));
  if (k < 2) return out;  // a single clump carries no column information

  const Arr1D c = cells.boundaries.cast<double>();

  // Row-distribution entropy of every clump span (s, t].
  Mat2D h_span(k + 1, k + 1);
  for (int s = 0; s < k; ++s)
    for (int t = s + 1; t <= k; ++t) h_span(s, t) = entropy(cum.col(t) - cum.col(s));

  const int l_max = std::min(x, k);
  constexpr double kLowest = std::numeric_limits<double>::lowest();

  // f(t, l): best H(P) - H(P,Q) over the first t clumps cut into l columns.
  Mat2D f = Mat2D::Constant(k + 1, l_max + 1, kLowest);
  for (int t = 2; t <= k; ++t) {
    double best = kLowest;
    for (int s = 1; s < t; ++s) {
      const double cand = entropy(Eigen::Array2d{c[s], c[t] - c[s]}) -
                          entropy_joint(cum.col(s), cum.col(t) - cum.col(s));
      best = std::max(best, cand);
    }
    f(t, 2) = best;
  }
  for (int l = 3; l <= l_max; ++l) {
    for (int t = l; t <= k; ++t) {
      double best = kLowest;
      for (int s = l - 1; s < t; ++s) {
        const double cand = (c[s] / c[t]) * f(s, l - 1) - ((c[t] - c[s]) / c[t]) * h_span(s, t);
        best = std::max(best, cand);
      }
      f(t, l) = best;
    }
  }

  for (int l = 2; l <= x; ++l)
    out.values[l - 2] =
        l <= l_max ? std::max(0.0, out.h_q + f(k, l)) : out.values[l_max - 2];
  return out;
}

}  // namespace mine
