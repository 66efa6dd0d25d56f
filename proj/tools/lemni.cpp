// lemni: job-file front end.
//
//   lemni classify --job jobs/blaschke_classify.json --out out/
//   lemni nonjordan --job jobs/exp_quadrilateral.json
//
// Exit status: 0 definite result, 2 bad input, 3 indeterminate or
// unresolved, 4 internal inconsistency.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lemni/cli/report.hpp"
#include "lemni/parallel.hpp"

int main(int argc, char** argv) {
  using namespace lemni::cli;

  CLI::App app{"Preimage counts, pseudo-lemniscate tests and preimage tracing for meromorphic functions"};
  app.require_subcommand(1);
  std::string job_path, out_dir;
  std::optional<std::uint64_t> seed;
  bool verbose = false, timings = false;
  int threads = 0;
  for (const char* name : {"classify", "nonjordan", "trace", "locate", "count", "blaschke-model"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--job", job_path, "job file (JSON)")->required();
    sub->add_option("--out", out_dir, "directory for the report and artifacts");
    sub->add_option("--seed", seed, "overrides the job's seed");
    sub->add_option("--threads", threads, "worker threads (results do not depend on it)");
    sub->add_flag("--verbose,-v", verbose, "progress on stderr, summary table on stdout");
    sub->add_flag("--timings", timings, "record wall-clock time in the report");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (threads > 0) lemni::set_parallelism(threads);

  RunOptions opts;
  opts.verbose = verbose;
  opts.timings = timings;

  // parse once more for the outputs block; errors are already in the report
  std::optional<JobSpec> job;
  try {
    job = load_job(job_path, seed);
  } catch (const lemni::Error&) {
  }
  const RunResult result = job ? run_job(command, *job, opts) : run_file(command, job_path, seed, opts);
  try {
    write_artifacts(result, job ? &*job : nullptr, command, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "lemni: " << e.what() << "\n";
    return kExitInput;
  }
  if (verbose || command == "blaschke-model") std::cerr << result.table;
  if (result.exit_code != 0 && !verbose) std::cerr << result.table;
  return result.exit_code;
}
