#include "amha/bench/metrics.hpp"

#include <cstdio>
#include <map>
#include <ostream>

namespace amha::bench {

MetricsRow make_metrics_row(std::string instance, std::string algo, const RunResult& result) {
  MetricsRow row;
  row.instance = std::move(instance);
  row.algo = std::move(algo);
  row.expansions = result.expansions_total;
  row.success = result.solved();
  if (row.success) {
    const auto& first = result.records.front();
    const auto& last = result.records.back();
    row.t_initial = first.elapsed;
    row.t_final = last.elapsed;
    row.eps_initial = first.bound;
    row.eps_final = last.bound;
    row.cost_initial = first.cost;
    row.cost_final = last.cost;
  }
  return row;
}

std::vector<AggregateRow> aggregate(std::span<const MetricsRow> rows) {
  std::vector<AggregateRow> out;
  std::map<std::string, std::size_t> index;
  for (const auto& r : rows) {
    auto [it, inserted] = index.try_emplace(r.algo, out.size());
    if (inserted) out.push_back(AggregateRow{.algo = r.algo});
    auto& a = out[it->second];
    ++a.runs;
    if (!r.success) continue;
    ++a.successes;
    a.t_initial += r.t_initial;
    a.t_final += r.t_final;
    a.eps_initial += r.eps_initial;
    a.eps_final += r.eps_final;
    a.cost_initial += static_cast<double>(r.cost_initial);
    a.cost_final += static_cast<double>(r.cost_final);
    a.expansions += static_cast<double>(r.expansions);
  }
  for (auto& a : out) {
    a.success_rate = 100.0 * static_cast<double>(a.successes) / static_cast<double>(a.runs);
    if (a.successes == 0) continue;
    const double n = static_cast<double>(a.successes);
    a.t_initial /= n;
    a.t_final /= n;
    a.eps_initial /= n;
    a.eps_final /= n;
    a.cost_initial /= n;
    a.cost_final /= n;
    a.expansions /= n;
  }
  return out;
}

std::string format_seconds(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", t);
  return buf;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

void write_summary_csv(std::ostream& os, std::span<const MetricsRow> rows, std::span<const AggregateRow> aggregates) {
  os << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    os << r.instance << ',' << r.algo << ',' << (r.success ? 1 : 0) << ',';
    if (r.success) {
      os << format_seconds(r.t_initial) << ',' << format_seconds(r.t_final) << ',' << format_real(r.eps_initial) << ','
         << format_real(r.eps_final) << ',' << r.cost_initial << ',' << r.cost_final;
    } else {
      os << ",,,,,";
    }
    os << ',' << r.expansions << '\n';
  }
  for (const auto& a : aggregates) {
    os << "mean," << a.algo << ',' << format_real(a.success_rate) << ',';
    if (a.successes > 0) {
      os << format_seconds(a.t_initial) << ',' << format_seconds(a.t_final) << ',' << format_real(a.eps_initial) << ','
         << format_real(a.eps_final) << ',' << format_real(a.cost_initial) << ',' << format_real(a.cost_final) << ','
         << format_real(a.expansions);
    } else {
      os << ",,,,,,";
    }
    os << '\n';
  }
}

std::vector<CurvePoint> curve_points(std::span<const SolutionRecord> records) {
  std::vector<CurvePoint> points;
  std::string last_stamp;
  for (const auto& r : records) {
    std::string stamp = format_seconds(r.elapsed);
    const CurvePoint p{r.elapsed, r.cost, r.bound};
    if (!points.empty() && stamp == last_stamp) {
      points.back() = p;
    } else {
      points.push_back(p);
    }
    last_stamp = std::move(stamp);
  }
  return points;
}

void write_curve_csv(std::ostream& os, std::span<const SolutionRecord> records) {
  os << kCurveHeader << '\n';
  for (const auto& p : curve_points(records)) {
    os << format_seconds(p.t) << ',' << p.cost << ',' << format_real(p.bound) << '\n';
  }
}

}  // namespace amha::bench
