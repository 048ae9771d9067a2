#pragma once

#include "mine/char_matrix.hpp"
#include "mine/types.hpp"

namespace mine {

/// The full statistics set for one variable pair. pearson_r and
/// nonlinearity are NaN when either variable has zero variance.
struct MineStatistics {
  double mic = 0.0;
  double mas = 0.0;
  double mev = 0.0;
  double mcn = 0.0;
  double pearson_r = 0.0;
  double nonlinearity = 0.0;
};

/// Maximum entry of the matrix.
double mic(const CharacteristicMatrix& m);

/// Maximum |M(x,y) - M(y,x)| over stored shapes.
double mas(const CharacteristicMatrix& m);

/// Maximum entry on the grid edge x = 2 or y = 2.
double mev(const CharacteristicMatrix& m);

/// log2 of the smallest cell count x*y among shapes whose entry equals the
/// maximum exactly. The maximum is itself a stored entry, so a match always
/// exists and no tolerance is applied.
double mcn(const CharacteristicMatrix& m);

/// Sample correlation, clamped to [-1, 1]; NaN if either variance is zero.
double pearson(const Arr1D& xs, const Arr1D& ys);

/// mic - r^2; NaN propagates from an undefined r.
double nonlinearity(double mic_value, double r);

MineStatistics compute_statistics(const Arr1D& xs, const Arr1D& ys, const Parameters& params);

}  // namespace mine
