#include "mine/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mine {

double mic(const CharacteristicMatrix& m) {
  double best = 0.0;
  m.for_each([&](int, int, double v) { best = std::max(best, v); });
  return best;
}

double mas(const CharacteristicMatrix& m) {
  double best = 0.0;
  m.for_each([&](int x, int y, double v) { best = std::max(best, std::abs(v - m.entry(y, x))); });
  return best;
}

double mev(const CharacteristicMatrix& m) {
  double best = 0.0;
  m.for_each([&](int x, int y, double v) {
    if (x == 2 || y == 2) best = std::max(best, v);
  });
  return best;
}

double mcn(const CharacteristicMatrix& m) {
  const double top = mic(m);
  long best = std::numeric_limits<long>::max();
  m.for_each([&](int x, int y, double v) {
    if (v == top) best = std::min(best, static_cast<long>(x) * y);
  });
  return std::log2(static_cast<double>(best));
}

double pearson(const Arr1D& xs, const Arr1D& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("pearson: input lengths differ");
  if (xs.size() < 2) throw std::invalid_argument("pearson: need at least 2 samples");
  const Arr1D dx = xs - xs.mean();
  const Arr1D dy = ys - ys.mean();
  const double sxx = (dx * dx).sum();
  const double syy = (dy * dy).sum();
  if (!(sxx > 0.0) || !(syy > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  const double r = (dx * dy).sum() / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

double nonlinearity(double mic_value, double r) { return mic_value - r * r; }

MineStatistics compute_statistics(const Arr1D& xs, const Arr1D& ys, const Parameters& params) {
  const CharacteristicMatrix m = compute_score(xs, ys, params);
  MineStatistics s;
  s.mic = mic(m);
  s.mas = mas(m);
  s.mev = mev(m);
  s.mcn = mcn(m);
  s.pearson_r = pearson(xs, ys);
  s.nonlinearity = nonlinearity(s.mic, s.pearson_r);
  return s;
}

}  // namespace mine
