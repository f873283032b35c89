#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "amha/solution.hpp"

namespace amha::bench {

inline constexpr const char* kSummaryHeader =
    "instance,algo,success,t_initial_s,t_final_s,eps_initial,eps_final,cost_initial,cost_final,expansions";
inline constexpr const char* kCurveHeader = "t_s,cost,bound";

struct MetricsRow {
  std::string instance;
  std::string algo;
  bool success = false;
  double t_initial = 0.0;
  double t_final = 0.0;
  double eps_initial = 0.0;
  double eps_final = 0.0;
  Cost cost_initial = kInfiniteCost;
  Cost cost_final = kInfiniteCost;
  std::uint64_t expansions = 0;
  std::string curve;  ///< relative path of the curve file
  std::string error;  ///< non-empty when the run threw
};

MetricsRow make_metrics_row(std::string instance, std::string algo, const RunResult& result);

struct AggregateRow {
  std::string algo;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;  ///< percent, over all runs
  // Means over successful runs; zero when none succeeded.
  double t_initial = 0.0;
  double t_final = 0.0;
  double eps_initial = 0.0;
  double eps_final = 0.0;
  double cost_initial = 0.0;
  double cost_final = 0.0;
  double expansions = 0.0;
};

/// One aggregate per algorithm, in order of first appearance.
std::vector<AggregateRow> aggregate(std::span<const MetricsRow> rows);

/// Fixed-precision decimal formatting shared by every CSV writer.
std::string format_seconds(double t);
std::string format_real(double x);

/// Data rows, then one "mean" row per algorithm.
void write_summary_csv(std::ostream& os, std::span<const MetricsRow> rows, std::span<const AggregateRow> aggregates);

struct CurvePoint {
  double t;
  Cost cost;
  double bound;
};

/// Records whose formatted timestamps coincide collapse onto the last one,
/// so the returned (and written) times are strictly increasing.
std::vector<CurvePoint> curve_points(std::span<const SolutionRecord> records);
void write_curve_csv(std::ostream& os, std::span<const SolutionRecord> records);

}  // namespace amha::bench
