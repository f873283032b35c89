#include "amha/bench/matrix.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <thread>

#include "amha/algorithms.hpp"
#include "amha/grid/lattice_domain.hpp"
#include "amha/tiles/tile_domain.hpp"

namespace amha::bench {
namespace {

class DomainFactory {
 public:
  explicit DomainFactory(const BenchConfig& config) : config_(config) {
    if (config.domain == DomainKind::kTiles) {
      weights_ = config.resolved_weights();
    } else {
      world_ = load_world(config);
    }
  }

  std::unique_ptr<SearchDomain> make(std::size_t instance) const {
    if (config_.domain == DomainKind::kTiles) {
      return std::make_unique<tiles::TileDomain>(config_.boards.at(instance), weights_);
    }
    return std::make_unique<grid::LatticeDomain>(world_, config_.scenarios.at(instance));
  }

 private:
  const BenchConfig& config_;
  std::vector<tiles::HeuristicWeights> weights_;
  std::shared_ptr<const grid::GridWorld> world_;
};

template <typename F>
void parallel_for(std::size_t n, int jobs, F&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
  if (workers <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

bool MatrixReport::all_passed() const {
  for (const auto& r : runs) {
    if (r.verdict && !r.verdict->pass()) return false;
    if (!r.row.error.empty()) return false;
  }
  return true;
}

std::string instance_id(const BenchConfig& config, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%03zu", config.domain == DomainKind::kTiles ? "t" : "g", index);
  return buf;
}

MatrixReport run_matrix(const BenchConfig& config, const std::filesystem::path& out_dir, const MatrixOptions& options) {
  config.validate();
  const DomainFactory factory(config);
  const std::size_t instances = config.instance_count();
  const std::size_t algos = config.algorithms.size();

  std::vector<std::optional<OracleResult>> oracles(instances);
  if (options.verify) {
    parallel_for(instances, config.jobs, [&](std::size_t i) {
      try {
        auto domain = factory.make(i);
        oracles[i] = oracle_optimal(*domain, config.oracle_max_states);
      } catch (const std::exception&) {
        oracles[i] = OracleResult{};
      }
    });
  }

  MatrixReport report;
  report.runs.resize(instances * algos);
  parallel_for(instances * algos, config.jobs, [&](std::size_t k) {
    const std::size_t inst = k / algos;
    const Mode mode = config.algorithms[k % algos];
    const std::string id = instance_id(config, inst);
    const std::string algo(to_string(mode));
    RunOutcome& out = report.runs[k];
    out.run_id = id + "-" + algo;
    try {
      PlannerConfig pc = config.planner_config(mode);
      pc.record_expansions = options.verify;
      auto domain = factory.make(inst);
      out.result = run_planner(*domain, pc);
      out.row = make_metrics_row(id, algo, out.result);
    } catch (const std::exception& e) {
      out.row = MetricsRow{};
      out.row.instance = id;
      out.row.algo = algo;
      out.row.error = e.what();
    }
    out.row.curve = "curves/" + out.run_id + ".csv";
    if (options.verify && out.row.error.empty()) {
      out.oracle = oracles[inst];
      const bool has_cost = out.oracle->solved();
      out.verdict = verify_run(out.result.records, has_cost ? std::optional<Cost>(out.oracle->cost) : std::nullopt,
                               out.result.expansion_log);
      if (out.oracle->status == OracleResult::Status::kUnreachable && out.result.solved()) {
        out.verdict->violations.push_back({"suboptimality", "solution published on an instance the oracle proved unreachable"});
      }
    }
    if (!options.keep_results) {
      out.result.expansion_log.clear();
      out.result.expansion_log.shrink_to_fit();
      for (auto& rec : out.result.records) {
        rec.path.clear();
        rec.path.shrink_to_fit();
      }
    }
  });

  std::vector<MetricsRow> rows;
  rows.reserve(report.runs.size());
  for (const auto& r : report.runs) rows.push_back(r.row);
  report.aggregates = aggregate(rows);

  if (options.write_files) {
    std::filesystem::create_directories(out_dir / "curves");
    {
      std::ofstream summary(out_dir / "summary.csv", std::ios::binary);
      if (!summary) throw std::runtime_error("cannot write " + (out_dir / "summary.csv").string());
      write_summary_csv(summary, rows, report.aggregates);
    }
    for (const auto& r : report.runs) {
      std::ofstream curve(out_dir / r.row.curve, std::ios::binary);
      write_curve_csv(curve, r.result.records);
    }
    write_file(out_dir / "manifest.txt", write_manifest(config));
    if (options.verify) {
      std::string text;
      for (const auto& r : report.runs) {
        text += r.run_id + ' ';
        if (!r.row.error.empty()) {
          text += "error " + r.row.error;
        } else {
          text += r.verdict->summary();
          if (!r.oracle->solved()) text += " (oracle unavailable, bound check skipped)";
        }
        text += '\n';
      }
      write_file(out_dir / "verify.txt", text);
    }
  }

  return report;
}

}  // namespace amha::bench
