#pragma once

#include "mine/mutual_info.hpp"
#include "mine/statistics.hpp"
#include "mine/types.hpp"

namespace mine {

/// Exhaustive-enumeration result: per-column-count maxima of I(P;Q) and the
/// number of boundary placements visited.
struct OracleResult {
  Arr1D values;
  long long enumerated = 0;
};

/// Brute-force counterpart of optimize_x_axis: for each l, every choice of
/// l-1 interior clump boundaries is enumerated and I(P;Q) is computed
/// directly from the cell counts as H(P) + H(Q) - H(P,Q), independent of
/// the dynamic program. Guarded to k <= 14 clumps and x <= 7 columns.
OracleResult brute_force_max_mi(const CellCounts& cells, int x);

/// Statistics computed through a cache-free mutual-information path: every
/// entropy term is recounted from the raw row labels instead of read from
/// the precomputed cell-count and span-entropy matrices. Partitioning,
/// combination arithmetic and reductions are the shared ones, so the result
/// must match compute_statistics bit for bit. Guarded to n <= 200.
MineStatistics reference_statistics(const Arr1D& xs, const Arr1D& ys, const Parameters& params);

}  // namespace mine
