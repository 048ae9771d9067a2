#include "mine/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mine {

std::vector<std::pair<int, int>> expand_pairs(const AnalysisTask& task, Eigen::Index p) {
  const int count = static_cast<int>(p);
  auto check = [&](int idx, const char* what) {
    if (idx < 1 || idx > count)
      throw std::out_of_range(std::string("expand_pairs: ") + what + " index out of range");
  };
  std::vector<std::pair<int, int>> pairs;
  switch (task.mode) {
    case AnalysisMode::all_pairs:
      pairs.reserve(static_cast<std::size_t>(count) * (count - 1) / 2);
      for (int i = 1; i <= count; ++i)
        for (int j = i + 1; j <= count; ++j) pairs.emplace_back(i, j);
      break;
    case AnalysisMode::master_vs_all:
      check(task.master, "master");
      pairs.reserve(static_cast<std::size_t>(count) - 1);
      for (int j = 1; j <= count; ++j)
        if (j != task.master) pairs.emplace_back(task.master, j);
      break;
    case AnalysisMode::single_pair:
      check(task.first, "first");
      check(task.second, "second");
      if (task.first == task.second)
        throw std::invalid_argument("expand_pairs: pair indices must differ");
      pairs.emplace_back(task.first, task.second);
      break;
  }
  return pairs;
}

PairSequence::PairSequence(const AnalysisTask& task, Eigen::Index p)
    : mode_(task.mode), p_(p), master_(task.master), first_(task.first), second_(task.second) {
  auto check = [&](long long idx, const char* what) {
    if (idx < 1 || idx > p_)
      throw std::out_of_range(std::string("expand_pairs: ") + what + " index out of range");
  };
  switch (mode_) {
    case AnalysisMode::all_pairs:
      size_ = static_cast<std::size_t>(p_ * (p_ - 1) / 2);
      break;
    case AnalysisMode::master_vs_all:
      check(master_, "master");
      size_ = static_cast<std::size_t>(p_ - 1);
      break;
    case AnalysisMode::single_pair:
      check(first_, "first");
      check(second_, "second");
      if (first_ == second_)
        throw std::invalid_argument("expand_pairs: pair indices must differ");
      size_ = 1;
      break;
  }
}

std::pair<int, int> PairSequence::at(std::size_t w) const {
  switch (mode_) {
    case AnalysisMode::all_pairs: {
      // Count pairs from the sequence end: the row with first index i holds
      // p - i pairs, so the m-th row from the bottom starts m(m+1)/2 pairs
      // before the end.
      const long long total = p_ * (p_ - 1) / 2;
      const long long r = total - static_cast<long long>(w);
      long long m = static_cast<long long>((std::sqrt(8.0 * static_cast<double>(r) + 1.0) - 1.0) / 2.0);
      while (m * (m + 1) / 2 < r) ++m;
      while (m >= 1 && (m - 1) * m / 2 >= r) --m;
      const long long i = p_ - m;
      const long long row_start = total - m * (m + 1) / 2;
      const long long j = i + 1 + (static_cast<long long>(w) - row_start);
      return {static_cast<int>(i), static_cast<int>(j)};
    }
    case AnalysisMode::master_vs_all: {
      const long long j = static_cast<long long>(w) + 1;
      return {static_cast<int>(master_), static_cast<int>(j < master_ ? j : j + 1)};
    }
    case AnalysisMode::single_pair:
    default:
      return {static_cast<int>(first_), static_cast<int>(second_)};
  }
}

Dataset filter_low_variance(const Dataset& dataset, double threshold) {
  if (threshold < 0.0)
    throw std::invalid_argument("filter_low_variance: threshold must be >= 0");
  const Eigen::Index n = dataset.n();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < dataset.p(); ++j) {
    const Arr1D col = dataset.values.col(j).array();
    const Arr1D d = col - col.mean();
    const double variance = (d * d).sum() / static_cast<double>(n - 1);
    if (!(variance < threshold)) keep.push_back(j);
  }
  if (keep.empty())
    throw std::invalid_argument("filter_low_variance: no variables pass the threshold");
  Dataset out;
  out.values.resize(n, static_cast<Eigen::Index>(keep.size()));
  out.names.reserve(keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) {
    out.values.col(static_cast<Eigen::Index>(j)) = dataset.values.col(keep[j]);
    out.names.push_back(dataset.names[static_cast<std::size_t>(keep[j])]);
  }
  return out;
}

namespace {

ResultRecord score_pair(const Dataset& ds, int i, int j, const Parameters& params) {
  // Orient each record so the lower index comes first; every statistic is
  // symmetric in its arguments.
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  ResultRecord rec;
  rec.name_x = ds.names[static_cast<std::size_t>(lo - 1)];
  rec.name_y = ds.names[static_cast<std::size_t>(hi - 1)];
  const Arr1D xs = ds.values.col(lo - 1).array();
  const Arr1D ys = ds.values.col(hi - 1).array();
  rec.stats = compute_statistics(xs, ys, params);
  return rec;
}

}  // namespace

void run_analysis(const Dataset& dataset, const AnalysisTask& task,
                  const std::function<void(const ResultRecord&)>& emit) {
  if (task.workers < 1) throw std::invalid_argument("run_analysis: workers must be positive");

  const Dataset* ds = &dataset;
  Dataset filtered;
  if (task.min_variance) {
    filtered = filter_low_variance(dataset, *task.min_variance);
    ds = &filtered;
  }

  const PairSequence pairs(task, ds->p());
  const std::size_t total = pairs.size();
  const unsigned workers = task.workers;

  // Pairs are processed in fixed blocks emitted in sequence; inside a block
  // workers claim chunks dynamically and write into the slot of each pair,
  // so output order is independent of scheduling and memory stays bounded
  // by the block size.
  constexpr std::size_t kChunk = 64;
  const std::size_t block = std::max<std::size_t>(kChunk * workers * 8, 4096);

  std::vector<ResultRecord> buffer;
  for (std::size_t base = 0; base < total; base += block) {
    const std::size_t count = std::min(block, total - base);
    buffer.assign(count, ResultRecord{});
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&]() {
      try {
        while (true) {
          const std::size_t begin = cursor.fetch_add(kChunk, std::memory_order_relaxed);
          if (begin >= count) break;
          const std::size_t end = std::min(begin + kChunk, count);
          for (std::size_t w = begin; w < end; ++w) {
            const auto [i, j] = pairs.at(base + w);
            buffer[w] = score_pair(*ds, i, j, task.params);
          }
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };

    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> threads;
      threads.reserve(workers);
      for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work);
      for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    for (const auto& rec : buffer) emit(rec);
  }
}

std::vector<ResultRecord> run_analysis(const Dataset& dataset, const AnalysisTask& task) {
  std::vector<ResultRecord> out;
  run_analysis(dataset, task, [&](const ResultRecord& rec) { out.push_back(rec); });
  return out;
}

}  // namespace mine
