#pragma once

#include <cmath>
#include <stdexcept>

#include "mine/partition.hpp"
#include "mine/types.hpp"

namespace mine {

/// Shannon entropy, in nats, of the distribution obtained by normalizing a
/// non-negative weight vector. Zero weights contribute nothing (0 log 0 = 0).
/// Accumulation is a plain sequential loop so that the same weights in the
/// same order always give the same bits, whatever Eigen expression they
/// come wrapped in.
template <typename Derived>
double entropy(const Eigen::DenseBase<Derived>& weights) {
  const Eigen::Index len = weights.size();
  double total = 0.0;
  for (Eigen::Index i = 0; i < len; ++i) total += static_cast<double>(weights.derived().coeff(i));
  if (!(total > 0.0)) throw std::invalid_argument("entropy: weights must contain a positive entry");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < len; ++i) {
    const double w = static_cast<double>(weights.derived().coeff(i));
    if (w > 0.0) {
      const double p = w / total;
      acc += p * std::log(p);
    }
  }
  return -acc;
}

/// Entropy of the concatenation (wa, wb), in that order.
template <typename DerivedA, typename DerivedB>
double entropy_joint(const Eigen::DenseBase<DerivedA>& wa, const Eigen::DenseBase<DerivedB>& wb) {
  const Eigen::Index la = wa.size();
  const Eigen::Index lb = wb.size();
  double total = 0.0;
  for (Eigen::Index i = 0; i < la; ++i) total += static_cast<double>(wa.derived().coeff(i));
  for (Eigen::Index i = 0; i < lb; ++i) total += static_cast<double>(wb.derived().coeff(i));
  if (!(total > 0.0)) throw std::invalid_argument("entropy: weights must contain a positive entry");
  double acc = 0.0;
  auto add = [&](double w) {
    if (w > 0.0) {
      const double p = w / total;
      acc += p * std::log(p);
    }
  };
  for (Eigen::Index i = 0; i < la; ++i) add(static_cast<double>(wa.derived().coeff(i)));
  for (Eigen::Index i = 0; i < lb; ++i) add(static_cast<double>(wb.derived().coeff(i)));
  return -acc;
}

/// Per-cell point counts of a (row, clump) grid.
/// counts(r, j) is the number of points in clump j+1 with row r+1;
/// cumulative(r, j) sums counts over the first j clumps (column 0 is zero),
/// so column differences give the row distribution of any clump span.
struct CellCounts {
  Mat2I counts;
  Mat2I cumulative;
  Arr1I boundaries;

  int rows() const { return static_cast<int>(counts.rows()); }
  int clumps() const { return static_cast<int>(counts.cols()); }
  int total() const { return boundaries[boundaries.size() - 1]; }
};

CellCounts build_cell_counts(const SortedPairs& points, const RowPartition& q,
                             const ColumnPartition& p);

/// Maximal unnormalized mutual information per column count.
/// values[l-2] holds I_l for l = 2..x, in nats; h_q is the row-marginal
/// entropy H(Q).
struct MiProfile {
  Arr1D values;
  double h_q = 0.0;
};

/// Dynamic program over column boundaries restricted to clump ends.
/// For each l, I_l is the exact maximum of I(P;Q) over partitions of the
/// clumps into l columns; for l beyond the clump count no finer partition
/// exists and I_l repeats I_k. The row-distribution entropies of all clump
/// spans are precomputed once; this changes speed, not results.
MiProfile optimize_x_axis(const CellCounts& cells, int x);

}  // namespace mine
