#include "mine/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mine/char_matrix.hpp"
#include "mine/partition.hpp"

namespace mine {

OracleResult brute_force_max_mi(const CellCounts& cells, int x) {
  if (x < 2) throw std::invalid_argument("brute_force_max_mi: column target must be >= 2");
  const int k = cells.clumps();
  const int rows = cells.rows();
  if (k > 14 || x > 7)
    throw std::invalid_argument("brute_force_max_mi: instance too large to enumerate");

  OracleResult out;
  out.values = Arr1D::Zero(x - 1);
  const Mat2D cum = cells.cumulative.cast<double>();
  const double h_q = entropy(cum.col(k));
  const Arr1I& c = cells.boundaries;

  const int l_top = std::min(x, k);
  for (int l = 2; l <= l_top; ++l) {
    double best = std::numeric_limits<double>::lowest();
    // Odometer over the l-1 interior boundaries, drawn from clump ends 1..k-1.
    std::vector<int> cut(static_cast<std::size_t>(l - 1));
    for (int i = 0; i < l - 1; ++i) cut[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      Eigen::VectorXd col_sizes(l);
      Eigen::VectorXd joint(static_cast<Eigen::Index>(l) * rows);
      int prev = 0;
      for (int col = 0; col < l; ++col) {
        const int t = col < l - 1 ? cut[static_cast<std::size_t>(col)] : k;
        col_sizes[col] = static_cast<double>(c[t] - c[prev]);
        for (int r = 0; r < rows; ++r)
          joint[static_cast<Eigen::Index>(col) * rows + r] = cum(r, t) - cum(r, prev);
        prev = t;
      }
      best = std::max(best, h_q + entropy(col_sizes) - entropy(joint));
      ++out.enumerated;

      int pos = l - 2;
      while (pos >= 0 && cut[static_cast<std::size_t>(pos)] == k - (l - 1) + pos) --pos;
      if (pos < 0) break;
      ++cut[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < l - 1; ++i)
        cut[static_cast<std::size_t>(i)] = cut[static_cast<std::size_t>(i - 1)] + 1;
    }
    out.values[l - 2] = best;
  }
  for (int l = l_top + 1; l <= x; ++l)
    out.values[l - 2] = l_top >= 2 ? out.values[l_top - 2] : 0.0;
  return out;
}

namespace {

// Row-distribution entropy of the x-sorted positions [lo, hi), recounted
// from the raw row labels on every call.
double recounted_span_entropy(const Arr1I& q_x, int lo, int hi, int rows) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(rows);
  for (int i = lo; i < hi; ++i) w[q_x[i] - 1] += 1.0;
  return entropy(w);
}

// Joint (column, row) entropy of two adjacent spans, columns outer.
double recounted_joint_entropy(const Arr1I& q_x, int b0, int b1, int b2, int rows) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(2 * rows);
  for (int i = b0; i < b1; ++i) w[q_x[i] - 1] += 1.0;
  for (int i = b1; i < b2; ++i) w[rows + q_x[i] - 1] += 1.0;
  return entropy(w);
}

// optimize_x_axis with every precomputed quantity replaced by a recount.
Arr1D cache_free_mi_profile(const Arr1I& q_x, int rows, const Arr1I& c, int x) {
  const int k = static_cast<int>(c.size()) - 1;
  const int n = c[k];
  Arr1D values = Arr1D::Zero(x - 1);
  const double h_q = recounted_span_entropy(q_x, 0, n, rows);
  if (k < 2) return values;

  const int l_max = std::min(x, k);
  constexpr double kLowest = std::numeric_limits<double>::lowest();
  Mat2D f = Mat2D::Constant(k + 1, l_max + 1, kLowest);
  for (int t = 2; t <= k; ++t) {
    double best = kLowest;
    for (int s = 1; s < t; ++s) {
      const double cs = static_cast<double>(c[s]);
      const double ct = static_cast<double>(c[t]);
      const double cand = entropy(Eigen::Array2d{cs, ct - cs}) -
                          recounted_joint_entropy(q_x, 0, c[s], c[t], rows);
      best = std::max(best, cand);
    }
    f(t, 2) = best;
  }
  for (int l = 3; l <= l_max; ++l) {
    for (int t = l; t <= k; ++t) {
      double best = kLowest;
      for (int s = l - 1; s < t; ++s) {
        const double cs = static_cast<double>(c[s]);
        const double ct = static_cast<double>(c[t]);
        const double cand = (cs / ct) * f(s, l - 1) -
                            ((ct - cs) / ct) * recounted_span_entropy(q_x, c[s], c[t], rows);
        best = std::max(best, cand);
      }
      f(t, l) = best;
    }
  }
  for (int l = 2; l <= x; ++l)
    values[l - 2] = l <= l_max ? std::max(0.0, h_q + f(k, l)) : values[l_max - 2];
  return values;
}

void cache_free_orientation(const Arr1D& col_var, const Arr1D& row_var, const Parameters& params,
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
    const Arr1D values = cache_free_mi_profile(q_x.assignment, q.row_count, p.boundaries, x_max);
    for (int l = 2; l <= x_max; ++l) {
      const double norm = std::min(std::log(static_cast<double>(l)), norm_rows);
      const double value = norm > 0.0 ? values[l - 2] / norm : 0.0;
      if (swapped)
        m.update_max(y, l, value);
      else
        m.update_max(l, y, value);
    }
  }
}

}  // namespace

MineStatistics reference_statistics(const Arr1D& xs, const Arr1D& ys, const Parameters& params) {
  validate_parameters(params);
  if (xs.size() != ys.size())
    throw std::invalid_argument("reference_statistics: input lengths differ");
  if (xs.size() > 200)
    throw std::invalid_argument("reference_statistics: guarded to n <= 200");

  CharacteristicMatrix m(grid_bound(xs.size(), params.alpha));
  cache_free_orientation(xs, ys, params, false, m);
  cache_free_orientation(ys, xs, params, true, m);

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
