#include <doctest.h>

#include "randprox/config.hpp"
#include "randprox/experiment.hpp"

using namespace randprox;

namespace {

const char* kSample = R"json({
  "graph": {
    "vertices": [1, 2, 3, 4, 5],
    "edges": [[1, 2], [2, 3], [3, 4], [4, 5], [5, 3]]
  },
  "cover": {"mode": "edges"},
  "dimension": 1,
  "costs": [
    {"type": "quadratic", "a": 1.0, "c": 1},
    {"type": "quadratic", "a": 1.0, "c": 2},
    {"type": "quadratic", "a": 1.0, "c": 3},
    {"type": "quadratic", "a": 1.0, "c": 4},
    {"type": "quadratic", "a": 1.0, "c": 5}
  ],
  "algorithm": "async-admm",
  "rho": 1.0,
  "activation": {"mode": "node-wakeup"},
  "budget": 5000,
  "record_every": 10,
  "seed": 1
})json";

std::string error_message(const std::string& text) {
  try {
    parse_config_json(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigInvalid);
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("the sample config matches the built-in defaults") {
  const ExperimentConfig parsed = parse_config_json(kSample);
  const ExperimentConfig defaults = ExperimentConfig::g5_defaults();
  CHECK(config_to_json(parsed) == config_to_json(defaults));
  CHECK_NOTHROW(validate_config(parsed));
}

TEST_CASE("configs round-trip through JSON") {
  ExperimentConfig cfg = ExperimentConfig::g5_defaults();
  cfg.cover_mode = CoverMode::Custom;
  cfg.custom_sets = {{1, 2}, {2, 3}, {3, 4, 5}};
  cfg.activation_mode = ActivationMode::Explicit;
  cfg.activation_p = {0.25, 0.25, 0.5};
  cfg.algorithm = Algorithm::SyncAdmm;
  cfg.init.x = {1.0, 2.0, 3.0, 4.0, 5.0};
  cfg.init.zbar = {{0.5}, {0.25}, {0.0}};
  cfg.init.lambda = {{-1.0, 1.0}, {0.0, 0.0}, {0.5, 0.0, -0.5}};

  const std::string once = config_to_json(cfg);
  const std::string twice = config_to_json(parse_config_json(once));
  CHECK(once == twice);
}

TEST_CASE("vertex order in the file binds the cost order") {
  const char* shuffled = R"json({
    "graph": {"vertices": [2, 1], "edges": [[1, 2]]},
    "costs": [
      {"type": "quadratic", "c": 20},
      {"type": "quadratic", "c": 10}
    ]
  })json";
  const ExperimentConfig cfg = parse_config_json(shuffled);
  REQUIRE(cfg.vertices == std::vector<VertexId>{1, 2});
  CHECK(cfg.costs[0].c == Point{10.0});  // vertex 1 got the cost listed for it
  CHECK(cfg.costs[1].c == Point{20.0});
}

TEST_CASE("defaults fill unspecified fields") {
  const char* minimal = R"json({
    "graph": {"vertices": [1, 2], "edges": [[1, 2]]},
    "costs": [{"type": "zero"}, {"type": "quadratic", "c": 4}]
  })json";
  const ExperimentConfig cfg = parse_config_json(minimal);
  CHECK(cfg.algorithm == Algorithm::AsyncAdmm);
  CHECK(cfg.rho == 1.0);
  CHECK(cfg.cover_mode == CoverMode::Edges);
  CHECK(cfg.activation_mode == ActivationMode::NodeWakeup);
  CHECK(cfg.budget == 5000);
  CHECK(cfg.seed == 1);
  CHECK_NOTHROW(validate_config(cfg));
}

TEST_CASE("schema violations name the offending field") {
  CHECK(error_message("{") .find("not valid JSON") != std::string::npos);
  CHECK(error_message("[1]").find("expected a JSON object") != std::string::npos);
  CHECK(error_message(R"({"costs": []})").find("graph") != std::string::npos);

  CHECK(error_message(R"json({
    "graph": {"vertices": [1, 1], "edges": []},
    "costs": [{"type": "zero"}, {"type": "zero"}]
  })json").find("graph.vertices") != std::string::npos);

  CHECK(error_message(R"json({
    "graph": {"vertices": [1, 2], "edges": [[1]]},
    "costs": [{"type": "zero"}, {"type": "zero"}]
  })json").find("graph.edges[0]") != std::string::npos);

  CHECK(error_message(R"json({
    "graph": {"vertices": [1, 2], "edges": [[1, 2]]},
    "costs": [{"type": "nope"}, {"type": "zero"}]
  })json").find("costs[0].type") != std::string::npos);

  CHECK(error_message(R"json({
    "graph": {"vertices": [1, 2], "edges": [[1, 2]]},
    "costs": [{"type": "zero"}]
  })json").find("costs") != std::string::npos);

  CHECK(error_message(R"json({
    "graph": {"vertices": [1, 2], "edges": [[1, 2]]},
    "costs": [{"type": "zero"}, {"type": "zero"}],
    "algorithm": "turbo"
  })json").find("algorithm") != std::string::npos);

  CHECK(error_message(R"json({
    "graph": {"vertices": [1, 2], "edges": [[1, 2]]},
    "costs": [{"type": "zero"}, {"type": "zero"}],
    "cover": {"mode": "sideways"}
  })json").find("cover.mode") != std::string::npos);

  CHECK(error_message(R"json({
    "graph": {"vertices": [1, 2], "edges": [[1, 2]]},
    "costs": [{"type": "zero"}, {"type": "zero"}],
    "activation": {"mode": "explicit"}
  })json").find("activation.p") != std::string::npos);
}

TEST_CASE("quadratic centers accept scalars and arrays") {
  const char* vector_form = R"json({
    "graph": {"vertices": [1], "edges": []},
    "cover": {"mode": "full"},
    "dimension": 2,
    "costs": [{"type": "quadratic", "c": [1.5, -2.0]}]
  })json";
  const ExperimentConfig cfg = parse_config_json(vector_form);
  CHECK(cfg.costs[0].c == Point{1.5, -2.0});
}
