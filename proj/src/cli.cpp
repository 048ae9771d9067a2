#include "mine/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <thread>

#include "mine/io.hpp"

namespace mine {

namespace {

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::string default_output(const std::string& input) {
  const std::filesystem::path p(input);
  return (p.parent_path() / (p.stem().string() + "_MINE.txt")).string();
}

}  // namespace

CliOptions parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"MINE family statistics (MIC, MAS, MEV, MCN), Pearson correlation and the\n"
               "non-linearity index over a comma-delimited dataset, one variable per row."};
  app.name("mine");

  CliOptions opt;
  double alpha = 0.6;
  double c = 15.0;
  int master = 0;
  std::vector<int> pair;
  unsigned workers = default_workers();
  double min_variance = 0.0;

  app.add_option("input", opt.input, "dataset file: label,v1,...,vn per row")->required();
  app.add_option("-a,--alpha", alpha, "grid bound exponent, in (0, 1]")->capture_default_str();
  app.add_option("-c,--clumps", c, "clump budget multiplier, > 0")->capture_default_str();
  auto* master_opt =
      app.add_option("-m,--master", master, "score variable <index> (1-based) against all others");
  auto* pair_opt =
      app.add_option("-p,--pair", pair, "score one pair of 1-based variable indices")->expected(2);
  master_opt->excludes(pair_opt);
  pair_opt->excludes(master_opt);
  app.add_option("-o,--output", opt.output, "output file (default: <input stem>_MINE.txt)");
  app.add_option("-j,--workers", workers, "parallel workers")->capture_default_str();
  auto* min_variance_opt = app.add_option("--min-variance", min_variance,
                                          "drop variables with sample variance below this value")
                               ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mine");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    opt.show_help = true;
    opt.help_text = app.help();
    return opt;
  } catch (const CLI::ParseError& e) {
    throw CliUsageError(e.what());
  }

  if (!(alpha > 0.0) || alpha > 1.0) throw CliUsageError("alpha must be in (0, 1]");
  if (!(c > 0.0)) throw CliUsageError("c must be > 0");
  opt.task.params.alpha = alpha;
  opt.task.params.c = c;
  if (workers < 1) throw CliUsageError("workers must be >= 1");
  opt.task.workers = workers;
  if (min_variance_opt->count() > 0) opt.task.min_variance = min_variance;

  if (master_opt->count() > 0) {
    if (master < 1) throw CliUsageError("master index must be >= 1");
    opt.task.mode = AnalysisMode::master_vs_all;
    opt.task.master = master;
  } else if (pair_opt->count() > 0) {
    if (pair[0] < 1 || pair[1] < 1) throw CliUsageError("pair indices must be >= 1");
    if (pair[0] == pair[1]) throw CliUsageError("pair indices must differ");
    opt.task.mode = AnalysisMode::single_pair;
    opt.task.first = pair[0];
    opt.task.second = pair[1];
  } else {
    opt.task.mode = AnalysisMode::all_pairs;
  }

  if (opt.output.empty()) opt.output = default_output(opt.input);
  return opt;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliOptions opt;
  try {
    opt = parse_cli(args);
  } catch (const CliUsageError& e) {
    err << "mine: " << e.what() << "\n";
    return 2;
  }
  if (opt.show_help) {
    out << opt.help_text;
    return 0;
  }
  try {
    const Dataset dataset = read_dataset(opt.input);
    ResultWriter writer(opt.output);
    std::size_t count = 0;
    run_analysis(dataset, opt.task, [&](const ResultRecord& rec) {
      writer.write(rec);
      ++count;
    });
    writer.close();
    out << "wrote " << count << " record(s) to " << opt.output << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "mine: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mine
