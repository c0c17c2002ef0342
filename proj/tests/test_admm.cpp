#include <doctest.h>

#include <cmath>

#include "randprox/admm.hpp"
#include "randprox/resolvent.hpp"
#include "testers.hpp"

using namespace randprox;
using namespace randprox::testing;

namespace {

double lambda_block_mean_worst(const AdmmState& state, int dim) {
  double worst = 0.0;
  for (int l = 0; l < state.lambda.block_count(); ++l) {
    for (int j = 0; j < dim; ++j) {
      worst = std::max(worst,
                       std::abs(block_coordinate_mean(state.lambda.block(l), dim, j)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("synchronous step on the two-node instance") {
  const Graph g({1, 2}, {{1, 2}});
  const ComponentCover cover = full_cover(g);
  const CostList costs = {std::make_shared<QuadraticCost>(1.0, Point{1.0}),
                          std::make_shared<QuadraticCost>(1.0, Point{3.0})};

  AdmmState state = zero_admm_state(cover, 1);
  state = sync_admm_step(std::move(state), 2.0, cover, costs);

  CHECK(state.x[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(state.x[1] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(state.zbar[0][0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(state.lambda.block(0)[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(state.lambda.block(0)[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(state.lambda.block(0)[0] + state.lambda.block(0)[1] == doctest::Approx(0.0));
  CHECK(state.k == 1);
  CHECK(state.primal_updates == 2);
}

TEST_CASE("zero costs keep the zero state fixed") {
  const Graph g = make_g5();
  const ComponentCover cover = edge_cover(g);
  const CostList costs(5, std::make_shared<ZeroCost>());

  AdmmState state = zero_admm_state(cover, 1);
  state = sync_admm_step(std::move(state), 1.0, cover, costs);
  for (double x : state.x) CHECK(x == 0.0);
  for (const auto& z : state.zbar) CHECK(z[0] == 0.0);
  for (int l = 0; l < 5; ++l) {
    for (double v : state.lambda.block(l)) CHECK(v == 0.0);
  }
}

TEST_CASE("async step with a single component matches the synchronous step") {
  SplitMix64 rng(31);
  const Graph g = make_g5();
  const ComponentCover cover = full_cover(g);
  for (int instance = 0; instance < 5; ++instance) {
    const CostList costs = random_quadratic_costs(rng, 5, 1);
    const double rho = rng.next_double(0.5, 2.0);
    AdmmState a = zero_admm_state(cover, 1);
    AdmmState b = zero_admm_state(cover, 1);
    for (int k = 0; k < 30; ++k) {
      a = sync_admm_step(std::move(a), rho, cover, costs);
      b = async_admm_step(std::move(b), 0, rho, cover, costs);
      CHECK(state_max_diff(a, b) < 1e-9);
    }
  }
}

TEST_CASE("async step touches only the activated component") {
  const Graph g = make_g5();
  const ComponentCover cover = edge_cover(g);
  const CostList costs = g5_costs();
  SplitMix64 rng(41);
  const AdmmState before = random_admm_state(rng, cover, 1);

  const int l = cover.find_pair_component(3, 4);
  REQUIRE(l >= 0);
  const AdmmState after = async_admm_step(before, l, 1.0, cover, costs);

  // agents outside {3,4} keep their primal bits
  for (VertexId v : {1, 2, 5}) {
    const int vi = cover.index_of(v);
    CHECK(after.x[static_cast<size_t>(vi)] == before.x[static_cast<size_t>(vi)]);
  }
  // every other component's duals and constant are untouched
  for (int m = 0; m < cover.component_count(); ++m) {
    if (m == l) continue;
    CHECK(after.lambda.block(m) == before.lambda.block(m));
    CHECK(after.zbar[static_cast<size_t>(m)] == before.zbar[static_cast<size_t>(m)]);
  }
  CHECK(after.primal_updates == before.primal_updates + 2);
}

TEST_CASE("async step equals the operator route") {
  const Graph g = make_g5();
  const ComponentCover cover = edge_cover(g);
  const CostList costs = g5_costs();
  const double rho = 1.0;
  const DouglasRachfordResolvent S(cover, costs, rho, 1);

  SplitMix64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const AdmmState state = random_admm_state(rng, cover, 1);
    const int l = static_cast<int>(rng.next_below(5));

    const AdmmState direct = async_admm_step(state, l, rho, cover, costs);

    const BlockVector zeta = lift_state(state, rho, cover);
    const DualPair duals = decompose(gs_hat_apply(S, l, zeta), rho, cover);

    CHECK(max_abs_diff(direct.lambda, duals.lambda) < 1e-10);
    for (size_t m = 0; m < direct.zbar.size(); ++m) {
      CHECK(std::abs(direct.zbar[m][0] - duals.zbar[m][0]) < 1e-10);
    }
  }
}

TEST_CASE("agent-level and operator trajectories stay together over a full run") {
  const Graph g = make_g5();
  const ComponentCover cover = edge_cover(g);
  const CostList costs = g5_costs();
  const double rho = 1.0;
  const DouglasRachfordResolvent S(cover, costs, rho, 1);
  const ActivationProcess law = node_wakeup_law(g, std::vector<double>(5, 0.2));

  SplitMix64 rng = SplitMix64::stream(1, 0);
  AdmmState state = zero_admm_state(cover, 1);
  BlockVector zeta(cover, 1);
  double worst = 0.0;
  for (int k = 0; k < 5000; ++k) {
    const int l = law.draw(rng);
    state = async_admm_step(std::move(state), l, rho, cover, costs);
    zeta = gs_hat_apply(S, l, zeta);
    const DualPair duals = decompose(zeta, rho, cover);
    worst = std::max(worst, max_abs_diff(state.lambda, duals.lambda));
    for (size_t m = 0; m < state.zbar.size(); ++m) {
      worst = std::max(worst, max_abs_diff(state.zbar[m], duals.zbar[m]));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("gossip step on the two-node instance") {
  const Graph g({1, 2}, {{1, 2}});
  const ComponentCover cover = edge_cover(g);
  const CostList costs = {std::make_shared<QuadraticCost>(1.0, Point{1.0}),
                          std::make_shared<QuadraticCost>(1.0, Point{3.0})};

  AdmmState state = zero_admm_state(cover, 1);
  state = gossip_edge_step(std::move(state), 1, 2, 2.0, cover, costs);
  CHECK(state.zbar[0][0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(state.lambda.block(0)[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(state.lambda.block(0)[0] + state.lambda.block(0)[1] == doctest::Approx(0.0));
}

TEST_CASE("gossip step agrees with the async step") {
  const Graph g = make_g5();
  const ComponentCover cover = edge_cover(g);
  const CostList costs = g5_costs();
  SplitMix64 rng(61);

  AdmmState via_gossip = random_admm_state(rng, cover, 1);
  AdmmState via_async = via_gossip;
  for (int step = 0; step < 100; ++step) {
    const int l = static_cast<int>(rng.next_below(5));
    const auto& comp = cover.component(l);
    via_gossip = gossip_edge_step(std::move(via_gossip), comp[0], comp[1], 1.0, cover, costs);
    via_async = async_admm_step(std::move(via_async), l, 1.0, cover, costs);
    CHECK(state_max_diff(via_gossip, via_async) <= 1e-12);
  }
}

TEST_CASE("gossip rejects non-edges") {
  const Graph g = make_g5();
  const ComponentCover cover = edge_cover(g);
  const CostList costs = g5_costs();
  AdmmState state = zero_admm_state(cover, 1);
  CHECK_THROWS_AS(gossip_edge_step(state, 1, 3, 1.0, cover, costs), Error);
  try {
    gossip_edge_step(state, 1, 3, 1.0, cover, costs);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnEdge);
  }
  CHECK_THROWS_AS(async_admm_step(state, 7, 1.0, cover, costs), Error);
  CHECK_THROWS_AS(sync_admm_step(state, -1.0, cover, costs), Error);
}

TEST_CASE("dual blocks stay mean-zero under every update") {
  const Graph g = make_g5();
  const CostList costs = g5_costs();
  SplitMix64 rng(71);

  SUBCASE("edge cover fuzz") {
    const ComponentCover cover = edge_cover(g);
    AdmmState state = zero_admm_state(cover, 1);
    for (int step = 0; step < 300; ++step) {
      const int which = static_cast<int>(rng.next_below(3));
      if (which == 0) {
        state = sync_admm_step(std::move(state), 1.0, cover, costs);
      } else if (which == 1) {
        state = async_admm_step(std::move(state), static_cast<int>(rng.next_below(5)),
                                1.0, cover, costs);
      } else {
        const auto& comp = cover.component(static_cast<int>(rng.next_below(5)));
        state = gossip_edge_step(std::move(state), comp[0], comp[1], 1.0, cover, costs);
      }
      CHECK(lambda_block_mean_worst(state, 1) <= 1e-10);
    }
  }

  SUBCASE("custom overlapping cover") {
    const ComponentCover cover(g, {{1, 2, 3}, {3, 4, 5}, {2, 3}});
    REQUIRE(validate_cover(g, cover).ok());
    AdmmState state = zero_admm_state(cover, 1);
    for (int step = 0; step < 200; ++step) {
      if (step % 2 == 0) {
        state = sync_admm_step(std::move(state), 0.7, cover, costs);
      } else {
        state = async_admm_step(std::move(state), static_cast<int>(rng.next_below(3)),
                                0.7, cover, costs);
      }
      CHECK(lambda_block_mean_worst(state, 1) <= 1e-10);
    }
  }
}

TEST_CASE("cover choice does not move the consensus point") {
  const Graph g = make_g5();
  SplitMix64 rng(81);
  for (int instance = 0; instance < 5; ++instance) {
    const CostList costs = random_quadratic_costs(rng, 5, 1);
    const Point xstar = centralized_minimizer(costs);

    const auto run = [&](const ComponentCover& cover) {
      AdmmState state = zero_admm_state(cover, 1);
      for (int k = 0; k < 600; ++k) {
        state = sync_admm_step(std::move(state), 1.0, cover, costs);
      }
      return state;
    };
    const AdmmState on_full = run(full_cover(g));
    const AdmmState on_edges = run(edge_cover(g));

    CHECK(consensus_disagreement(on_full, 1) < 1e-8);
    CHECK(consensus_disagreement(on_edges, 1) < 1e-8);
    for (int i = 0; i < 5; ++i) {
      CHECK(std::abs(on_full.x[static_cast<size_t>(i)] - xstar[0]) < 1e-6);
      CHECK(std::abs(on_edges.x[static_cast<size_t>(i)] - xstar[0]) < 1e-6);
      CHECK(std::abs(on_full.x[static_cast<size_t>(i)] -
                     on_edges.x[static_cast<size_t>(i)]) < 1e-6);
    }
  }
}

TEST_CASE("consensus_disagreement") {
  AdmmState state;
  state.x = {1.5, 1.5, 1.5};
  CHECK(consensus_disagreement(state, 1) == 0.0);
  state.x = {0.0, 1.0};
  CHECK(consensus_disagreement(state, 1) == 1.0);
  state.x = {0.0, 0.0, 3.0, 4.0};  // two 2-d points
  CHECK(consensus_disagreement(state, 2) == doctest::Approx(5.0).epsilon(1e-14));
}
