#pragma once

#include <vector>

#include "mine/types.hpp"

namespace mine {

/// Grid-search parameters: alpha controls the grid-size bound B = n^alpha,
/// c the clump budget k_hat = c * x per column count x.
struct Parameters {
  double alpha = 0.6;
  double c = 15.0;
};

/// Throws std::invalid_argument unless alpha is in (0, 1] and c > 0.
void validate_parameters(const Parameters& params);

/// Largest admitted grid cell count: max(floor(n^alpha), 4). The lower clamp
/// keeps the 2x2 grid admissible for tiny n.
int grid_bound(Eigen::Index n, double alpha);

/// Jagged matrix of normalized mutual information scores, one entry per grid
/// shape (x columns, y rows) with x, y >= 2 and x*y <= B.
class CharacteristicMatrix {
 public:
  explicit CharacteristicMatrix(int bound);

  int bound() const { return bound_; }
  int max_row_target() const { return bound_ / 2; }
  int max_col_target(int y) const { return bound_ / y; }

  bool contains(int x, int y) const {
    return x >= 2 && y >= 2 && static_cast<long>(x) * y <= bound_;
  }
  double entry(int x, int y) const { return rows_[y - 2][x - 2]; }
  void update_max(int x, int y, double value);

  /// Visit every stored entry as f(x, y, value).
  template <typename F>
  void for_each(F&& f) const {
    for (int y = 2; y <= max_row_target(); ++y)
      for (int x = 2; x <= max_col_target(y); ++x) f(x, y, rows_[y - 2][x - 2]);
  }

 private:
  int bound_;
  std::vector<Arr1D> rows_;
};

/// Characteristic matrix of one variable pair. Two passes are run, one per
/// axis orientation: each equipartitions the row axis, caps the column
/// clumps at k_hat = max(1, floor(c * x_max)), and maximizes mutual
/// information over column counts. An entry is the larger of its two
/// orientation scores, each normalized by min(log x, log y_realized); a pass
/// whose equipartition collapses to a single row contributes zero.
CharacteristicMatrix compute_score(const Arr1D& xs, const Arr1D& ys, const Parameters& params);

}  // namespace mine
