#include "mine/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <system_error>
#include <unordered_map>

namespace mine {

const char* const kResultHeader = "var1,var2,MIC,MAS,MEV,MCN,pearson,nonlinearity";

namespace {

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(const std::string& path, std::size_t line_no, const std::string& what) {
  throw std::runtime_error(path + ": line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string format_record(const ResultRecord& record) {
  const MineStatistics& s = record.stats;
  std::string line = record.name_x;
  line += ',';
  line += record.name_y;
  for (double v : {s.mic, s.mas, s.mev, s.mcn, s.pearson_r, s.nonlinearity}) {
    line += ',';
    line += format_value(v);
  }
  return line;
}

Dataset read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");

  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;
  Eigen::Index n = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const std::size_t comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() < 2)
      fail(path, line_no, "expected a label followed by at least one value");
    if (n == -1)
      n = static_cast<Eigen::Index>(fields.size()) - 1;
    else if (static_cast<Eigen::Index>(fields.size()) - 1 != n)
      fail(path, line_no,
           "expected " + std::to_string(n) + " values, got " + std::to_string(fields.size() - 1));

    const std::string_view label = trim(fields[0]);
    if (label.empty()) fail(path, line_no, "empty variable label");
    names.emplace_back(label);

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n));
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const std::string_view tok = trim(fields[f]);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
        fail(path, line_no,
             "field " + std::to_string(f + 1) + ": cannot parse '" + std::string(tok) +
                 "' as a finite number");
      values.push_back(v);
    }
    rows.push_back(std::move(values));
  }
  if (names.empty()) throw std::runtime_error(path + ": no variables found");
  if (n < 2) throw std::runtime_error(path + ": need at least 2 samples per variable");

  // Duplicate labels get an occurrence suffix so records stay unambiguous.
  std::unordered_map<std::string, int> seen;
  for (auto& name : names) {
    int& count = seen[name];
    ++count;
    if (count > 1) {
      int suffix = count;
      std::string candidate = name + "_" + std::to_string(suffix);
      while (seen.contains(candidate)) candidate = name + "_" + std::to_string(++suffix);
      seen[candidate] = 1;
      name = candidate;
    }
  }

  Dataset out;
  out.names = std::move(names);
  out.values.resize(n, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      out.values(i, static_cast<Eigen::Index>(j)) = rows[j][static_cast<std::size_t>(i)];
  return out;
}

ResultWriter::ResultWriter(std::string path)
    : path_(std::move(path)), temp_path_(path_ + ".tmp") {
  out_.open(temp_path_, std::ios::trunc);
  if (!out_) throw std::runtime_error(temp_path_ + ": cannot open for writing");
  out_ << kResultHeader << '\n';
}

ResultWriter::~ResultWriter() {
  if (!closed_) {
    out_.close();
    std::error_code ec;
    std::filesystem::remove(temp_path_, ec);
  }
}

void ResultWriter::write(const ResultRecord& record) { out_ << format_record(record) << '\n'; }

void ResultWriter::close() {
  if (closed_) return;
  out_.flush();
  if (!out_) throw std::runtime_error(temp_path_ + ": write failed");
  out_.close();
  std::error_code ec;
  std::filesystem::rename(temp_path_, path_, ec);
  if (ec) throw std::runtime_error(path_ + ": cannot replace output: " + ec.message());
  closed_ = true;
}

void write_results(const std::vector<ResultRecord>& records, const std::string& path) {
  ResultWriter writer(path);
  for (const auto& rec : records) writer.write(rec);
  writer.close();
}

}  // namespace mine
