#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "mine/analysis.hpp"

namespace mine {

/// Output header line shared by every results file.
extern const char* const kResultHeader;

/// One record rendered as a CSV line; reals carry 6 significant digits and
/// undefined values the literal token `nan`.
std::string format_record(const ResultRecord& record);

/// Reads a comma-delimited dataset: one variable per row, a leading label
/// field followed by the sample values. Throws std::runtime_error naming
/// the offending line (and field) on ragged rows, unparseable or non-finite
/// numbers, fewer than 2 samples, or an unreadable file. Duplicate labels
/// are made unique by suffixing.
Dataset read_dataset(const std::string& path);

/// Streams records to `path` through a temporary file that is atomically
/// renamed into place on close(). A writer destroyed without close()
/// removes its temporary and leaves any previous file untouched.
class ResultWriter {
 public:
  explicit ResultWriter(std::string path);
  ~ResultWriter();

  ResultWriter(const ResultWriter&) = delete;
  ResultWriter& operator=(const ResultWriter&) = delete;

  void write(const ResultRecord& record);
  void close();

 private:
  std::string path_;
  std::string temp_path_;
  std::ofstream out_;
  bool closed_ = false;
};

/// Writes header plus one line per record, atomically replacing `path`.
void write_results(const std::vector<ResultRecord>& records, const std::string& path);

}  // namespace mine
