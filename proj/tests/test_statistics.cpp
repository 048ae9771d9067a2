#include <doctest.h>

#include <cmath>
#include <random>

#include "mine/statistics.hpp"
#include "test_helpers.hpp"

using namespace mine;
using namespace minetest;

namespace {

CharacteristicMatrix hand_built() {
  // Bound 8 admits shapes (2,2) (3,2) (4,2) (2,3) (2,4).
  CharacteristicMatrix m(8);
  m.update_max(2, 2, 0.5);
  m.update_max(3, 2, 0.9);
  m.update_max(4, 2, 0.2);
  m.update_max(2, 3, 0.7);
  m.update_max(2, 4, 0.1);
  return m;
}

Arr1D iota(int n) {
  Arr1D v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("reductions of a hand-built matrix") {
  const CharacteristicMatrix m = hand_built();
  CHECK(mic(m) == 0.9);
  CHECK(mas(m) == doctest::Approx(0.2).epsilon(1e-15));  // |M(3,2) - M(2,3)|
  CHECK(mev(m) == 0.9);
  CHECK(mcn(m) == doctest::Approx(std::log2(6.0)).epsilon(1e-15));
}

TEST_CASE("identical variables give the extreme statistics") {
  const Arr1D x = iota(100);
  const MineStatistics s = compute_statistics(x, x, Parameters{});
  CHECK(s.mic == 1.0);
  CHECK(s.mas == 0.0);
  CHECK(s.mev == 1.0);
  CHECK(s.mcn == 2.0);
  CHECK(s.pearson_r == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.nonlinearity == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("a constant variable gives zero statistics and undefined pearson") {
  const Arr1D x = iota(40);
  const Arr1D y = Arr1D::Constant(40, 2.0);
  const MineStatistics s = compute_statistics(x, y, Parameters{});
  CHECK(s.mic == 0.0);
  CHECK(s.mcn == 2.0);  // the 2x2 shape attains the (zero) maximum
  CHECK(std::isnan(s.pearson_r));
  CHECK(std::isnan(s.nonlinearity));
}

TEST_CASE("pearson on exact lines") {
  const Arr1D x = iota(50);
  CHECK(pearson(x, x) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pearson(x, -x) == doctest::Approx(-1.0).epsilon(1e-14));
  const Arr1D shifted = x * 3.0 + 2.0;
  CHECK(pearson(x, shifted) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pearson input validation") {
  Arr1D x(3), y(2);
  x << 1, 2, 3;
  y << 1, 2;
  CHECK_THROWS_AS(pearson(x, y), std::invalid_argument);
  Arr1D one(1), one2(1);
  one << 1;
  one2 << 2;
  CHECK_THROWS_AS(pearson(one, one2), std::invalid_argument);
}

TEST_CASE("nonlinearity composes mic and pearson") {
  CHECK(nonlinearity(1.0, 1.0) == 0.0);
  CHECK(nonlinearity(0.5, 0.0) == 0.5);
  CHECK(std::isnan(nonlinearity(0.5, std::nan(""))));
}

TEST_CASE("sine benchmark nonlinearity matches an independent correlation") {
  const int n = 1001;
  Arr1D x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = static_cast<double>(i) / (n - 1);
    y[i] = std::sin(10.0 * M_PI * x[i]) + x[i];
  }
  const MineStatistics s = compute_statistics(x, y, Parameters{});

  // Correlation recomputed with a plain accumulation loop.
  double sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, syy = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double r = sxy / std::sqrt(sxx * syy);
  CHECK(s.pearson_r == doctest::Approx(r).epsilon(1e-12));
  CHECK(s.nonlinearity == doctest::Approx(s.mic - r * r).epsilon(1e-12));
}

TEST_CASE("reduction inequalities and swap invariance on random pairs") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> n_dist(10, 120);
  for (int iter = 0; iter < 60; ++iter) {
    auto [xs, ys] = random_pair(rng, n_dist(rng), cycle_style(iter));
    const CharacteristicMatrix m = compute_score(xs, ys, Parameters{});
    const double top = mic(m);
    CHECK(mas(m) <= top);
    CHECK(mev(m) <= top);
    CHECK(mcn(m) >= 2.0);
    CHECK(mcn(m) <= std::log2(static_cast<double>(m.bound())));

    const CharacteristicMatrix t = compute_score(ys, xs, Parameters{});
    CHECK(mic(t) == top);
    CHECK(mas(t) == mas(m));
    CHECK(mev(t) == mev(m));
    CHECK(mcn(t) == mcn(m));
  }
}
