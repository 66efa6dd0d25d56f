#pragma once

#include <optional>
#include <string>

#include "lemni/blaschke.hpp"
#include "lemni/cli/job.hpp"
#include "lemni/cli/svg.hpp"

namespace lemni::cli {

json to_json(const PreimageCountReport& r);
json to_json(const ZeroPoleRecord& r);
json to_json(const SampleRecord& r);
json to_json(const ClassificationReport& r);
json to_json(const NonJordanVerdict& v);
json to_json(const RatioModel& m);

/// Exit status of a run: 0 definite result, 2 bad input, 3 indeterminate or
/// numerically unresolved, 4 internal inconsistency.
enum ExitCode { kExitOk = 0, kExitInput = 2, kExitUnresolved = 3, kExitInternal = 4 };

int exit_code_for(ErrorKind kind);

struct RunOptions {
  bool verbose = false;
  bool timings = false;  // wall-clock timings make reports differ between runs
};

/// Everything one command produces. Nothing is written to disk here.
struct RunResult {
  int exit_code = kExitOk;
  json report;
  std::optional<Scene> scene;
  std::string csv;   // empty when the command has no CSV form
  std::string table; // human readable summary for stdout
};

/// The subcommands: classify, nonjordan, trace, locate, count, blaschke-model.
bool is_command(const std::string& name);

/// Runs `command` on an already parsed job. Library errors become an error
/// verdict with the matching exit code.
RunResult run_job(const std::string& command, const JobSpec& job, const RunOptions& opts = {});

/// Loads the job file first; parse and validation errors give exit 2 and an
/// error report.
RunResult run_file(const std::string& command, const std::string& job_path,
                   std::optional<std::uint64_t> seed_override = std::nullopt, const RunOptions& opts = {});

/// Writes the report, SVG and CSV named in the job's outputs (relative to
/// out_dir). With no out_dir and no json output the report goes to stdout.
void write_artifacts(const RunResult& result, const JobSpec* job, const std::string& command,
                     const std::string& out_dir);

}  // namespace lemni::cli
