#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mine/statistics.hpp"
#include "mine/types.hpp"

namespace mine {

/// A dataset of p named variables over n common samples, one column per
/// variable.
struct Dataset {
  std::vector<std::string> names;
  Mat2D values;

  Eigen::Index n() const { return values.rows(); }
  Eigen::Index p() const { return values.cols(); }
};

enum class AnalysisMode { all_pairs, master_vs_all, single_pair };

/// Batch description. Variable indices are 1-based, matching the CLI.
struct AnalysisTask {
  AnalysisMode mode = AnalysisMode::all_pairs;
  int master = 0;
  int first = 0;
  int second = 0;
  Parameters params;
  unsigned workers = 1;
  std::optional<double> min_variance;
};

struct ResultRecord {
  std::string name_x;
  std::string name_y;
  MineStatistics stats;
};

/// The 1-based index pairs a task scores, in emission order:
/// all pairs (i, j) with i < j row-major, (master, j) for ascending j, or
/// the single requested pair.
std::vector<std::pair<int, int>> expand_pairs(const AnalysisTask& task, Eigen::Index p);

/// Random access into the pair sequence of a task without materializing it,
/// so batch memory stays independent of the pair count. at(w) equals
/// expand_pairs(task, p)[w].
class PairSequence {
 public:
  PairSequence(const AnalysisTask& task, Eigen::Index p);

  std::size_t size() const { return size_; }
  std::pair<int, int> at(std::size_t w) const;

 private:
  AnalysisMode mode_;
  long long p_ = 0;
  long long master_ = 0;
  long long first_ = 0;
  long long second_ = 0;
  std::size_t size_ = 0;
};

/// Drops variables whose sample variance falls below `threshold`,
/// preserving order. Refuses to drop everything.
Dataset filter_low_variance(const Dataset& dataset, double threshold);

/// Scores every pair of the task across `workers` threads and hands records
/// to `emit` in pair order. Records are identical whatever the worker
/// count: each worker writes into its pair's slot of a fixed-size block
/// buffer, and blocks are emitted in sequence, keeping memory bounded by
/// the block size rather than the pair count. Each record is oriented so
/// name_x is the lower variable index.
void run_analysis(const Dataset& dataset, const AnalysisTask& task,
                  const std::function<void(const ResultRecord&)>& emit);

/// Convenience overload collecting all records.
std::vector<ResultRecord> run_analysis(const Dataset& dataset, const AnalysisTask& task);

}  // namespace mine
