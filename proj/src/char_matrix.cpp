#include "mine/char_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "mine/mutual_info.hpp"
#include "mine/partition.hpp"

namespace mine {

void validate_parameters(const Parameters& params) {
  if (!(params.alpha > 0.0) || params.alpha > 1.0)
    throw std::invalid_argument("parameters: alpha must be in (0, 1]");
  if (!(params.c > 0.0)) throw std::invalid_argument("parameters: c must be > 0");
}

int grid_bound(Eigen::Index n, double alpha) {
  const int b = static_cast<int>(std::floor(std::pow(static_cast<double>(n), alpha)));
  return std::max(b, 4);
}

CharacteristicMatrix::CharacteristicMatrix(int bound) : bound_(bound) {
  rows_.reserve(static_cast<std::size_t>(max_row_target() - 1));
  for (int y = 2; y <= max_row_target(); ++y)
    rows_.push_back(Arr1D::Zero(max_col_target(y) - 1));
}

void CharacteristicMatrix::update_max(int x, int y, double value) {
  // Normalized scores cannot exceed 1; the entropy cancellation in the
  // optimizer can overshoot by a few ulp, which would corrupt the
  // exact-equality cell search behind the complexity statistic.
  if (value > 1.0) value = 1.0;
  double& slot = rows_[y - 2][x - 2];
  if (value > slot) slot = value;
}

namespace {

// One orientation pass: rows on `row_var`, columns on `col_var`. With
// `swapped` set, a score for l columns at row target t lands in entry
// (t, l) instead of (l, t).
void score_orientation(const Arr1D& col_var, const Arr1D& row_var, const Parameters& params,
                       bool swapped, CharacteristicMatrix& m) {
  const SortedPairs by_second = sort_by_second(col_var, row_var);
  const SortedPairs by_first = sort_by_first(col_var, row_var);

  for (int y = 2; y <= m.max_row_target(); ++y) {
    const int x_max = m.max_col_target(y);
    const RowPartition q = equipartition_y_axis(by_second, y);
    const double norm_rows = std::log(static_cast<double>(q.row_count));
    const RowPartition q_x = reindex_to_first_order(q, by_second, by_first);
    const int k_hat =
        std::max(1, static_cast<int>(std::floor(params.c * static_cast<double>(x_max))));
    const ColumnPartition p = get_superclumps_partition(by_first, q_x, k_hat);
    const CellCounts cells = build_cell_counts(by_first, q_x, p);
    const MiProfile profile = optimize_x_axis(cells, x_max);
    for (int l = 2; l <= x_max; ++l) {
      const double norm = std::min(std::log(static_cast<double>(l)), norm_rows);
      const double value = norm > 0.0 ? profile.values[l - 2] / norm : 0.0;
      if (swapped)
        m.update_max(y, l, value);
      else
        m.update_max(l, y, value);
    }
  }
}

}  // namespace

CharacteristicMatrix compute_score(const Arr1D& xs, const Arr1D& ys, const Parameters& params) {
  validate_parameters(params);
  if (xs.size() != ys.size()) throw std::invalid_argument("compute_score: input lengths differ");
  if (xs.size() < 2) throw std::invalid_argument("compute_score: need at least 2 samples");
  if (!xs.allFinite() || !ys.allFinite())
    throw std::invalid_argument("compute_score: inputs must be finite");

  CharacteristicMatrix m(grid_bound(xs.size(), params.alpha));
  score_orientation(xs, ys, params, false, m);
  score_orientation(ys, xs, params, true, m);
  return m;
}

}  // namespace mine
