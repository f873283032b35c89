#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "amha/bench/bench_config.hpp"
#include "amha/bench/metrics.hpp"
#include "amha/bench/oracle.hpp"
#include "amha/bench/verify.hpp"

namespace amha::bench {

struct RunOutcome {
  std::string run_id;  ///< "<instance>-<algo>"
  MetricsRow row;
  RunResult result;
  std::optional<OracleResult> oracle;  ///< verify mode only
  std::optional<Verdict> verdict;      ///< verify mode only
};

struct MatrixOptions {
  bool verify = false;  ///< compute oracles, log expansions, check every run
  bool write_files = true;
  bool keep_results = false;  ///< keep full RunResults (paths, logs) in the report
};

struct MatrixReport {
  std::vector<RunOutcome> runs;  ///< instance-major, algorithms in config order
  std::vector<AggregateRow> aggregates;
  bool all_passed() const;
};

std::string instance_id(const BenchConfig& config, std::size_t index);

/// Runs every (algorithm x instance) pair, on `config.jobs` workers. With
/// `write_files`, writes summary.csv, curves/<run-id>.csv and manifest.txt
/// under `out_dir` (and verify.txt in verify mode). A run that throws
/// becomes a failed row; the matrix carries on.
MatrixReport run_matrix(const BenchConfig& config, const std::filesystem::path& out_dir, const MatrixOptions& options = {});

}  // namespace amha::bench
