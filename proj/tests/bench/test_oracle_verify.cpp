#include "amha/bench/oracle.hpp"
#include "amha/bench/verify.hpp"
#include "amha/explicit_graph.hpp"
#include "amha/tiles/board.hpp"
#include "amha/tiles/tile_domain.hpp"
#include "doctest.h"

using namespace amha;
using namespace amha::bench;

namespace {

SolutionRecord record(Cost cost, double w1, double w2) {
  SolutionRecord r;
  r.cost = cost;
  r.w1 = w1;
  r.w2 = w2;
  r.bound = w1 * w2;
  return r;
}

}  // namespace

TEST_CASE("oracle examples") {
  ExplicitGraph single(1, 0, {0}, 0);
  CHECK(oracle_optimal(single).cost == 0);
  tiles::TileDomain one(*tiles::TileBoard::goal(3, 3).moved(tiles::Move::kDown), {});
  CHECK(oracle_optimal(one).cost == 1);
  auto grid = make_grid_graph(5, 5, 0, 24, 0);
  const auto r = oracle_optimal(grid);
  CHECK(r.solved());
  CHECK(r.cost == 8);
}

TEST_CASE("oracle reports unreachable and unavailable") {
  ExplicitGraph g(3, 0, {2}, 0);
  g.add_edge(0, 1, 4);
  CHECK(oracle_optimal(g).status == OracleResult::Status::kUnreachable);
  tiles::TileDomain big(tiles::random_solvable_board(5, 5, 1), {});
  CHECK(oracle_optimal(big, 1000).status == OracleResult::Status::kUnavailable);
}

TEST_CASE("a final record at (1,1) with the optimal cost passes") {
  const std::vector<SolutionRecord> records{record(14, 3, 2), record(12, 2, 1), record(10, 1, 1)};
  const std::vector<ExpansionLogEntry> log{{1, 4, 1}, {1, 4, 0}, {1, 5, 0}, {2, 4, 0}};
  const auto v = verify_run(records, Cost{10}, log);
  CHECK(v.pass());
  CHECK(v.summary() == "pass");
}

TEST_CASE("injected faults are tagged") {
  const auto over = verify_run(std::vector{record(4 * 10 + 1, 2, 2)}, Cost{10}, {});
  CHECK_FALSE(over.pass());
  CHECK(over.has("suboptimality"));

  const std::vector<ExpansionLogEntry> triple{{1, 7, 1}, {1, 7, 0}, {1, 7, 0}};
  const auto thrice = verify_run(std::vector{record(10, 1, 1)}, Cost{10}, triple);
  CHECK(thrice.has("reexpansion"));

  const std::vector<ExpansionLogEntry> wrong_order{{1, 7, 0}, {1, 7, 2}};
  CHECK(verify_run(std::vector{record(10, 1, 1)}, Cost{10}, wrong_order).has("reexpansion"));

  CHECK(verify_run(std::vector{record(10, 2, 1), record(11, 1, 1)}, Cost{10}, {}).has("monotonicity"));
  CHECK(verify_run(std::vector{record(10, 1, 1), record(10, 2, 1)}, Cost{10}, {}).has("monotonicity"));
  CHECK(verify_run(std::vector{record(11, 1, 1)}, Cost{10}, {}).has("convergence"));
}

TEST_CASE("bound checks are skipped without an oracle") {
  const auto v = verify_run(std::vector{record(1000, 1, 1)}, std::nullopt, {});
  CHECK(v.pass());
}
