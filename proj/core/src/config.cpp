#include "randprox/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace randprox {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::ConfigInvalid, path + ": " + why);
}

const json& field(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::int64_t as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Point as_point(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>()};
  if (!j.is_array() || j.empty()) fail(path, "expected a number or array of numbers");
  Point p;
  p.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    p.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return p;
}

std::vector<double> as_double_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

CostSpec parse_cost(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  CostSpec spec;
  const std::string type = as_string(field(j, path, "type"), path + ".type");
  if (type == "zero") {
    spec.type = CostSpec::Type::Zero;
  } else if (type == "quadratic") {
    spec.type = CostSpec::Type::Quadratic;
    spec.a = j.contains("a") ? as_number(j["a"], path + ".a") : 1.0;
    spec.c = as_point(field(j, path, "c"), path + ".c");
  } else if (type == "abs") {
    spec.type = CostSpec::Type::AbsoluteValue;
    spec.c = as_point(field(j, path, "c"), path + ".c");
  } else {
    fail(path + ".type", "unknown cost type '" + type + "'");
  }
  return spec;
}

}  // namespace

ExperimentConfig parse_config_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("$", std::string("not valid JSON (") + e.what() + ")");
  }
  if (!root.is_object()) fail("$", "expected a JSON object");

  ExperimentConfig cfg;

  const json& graph = field(root, "$", "graph");
  if (!graph.is_object()) fail("graph", "expected an object");
  const json& vertices = field(graph, "graph", "vertices");
  if (!vertices.is_array() || vertices.empty()) {
    fail("graph.vertices", "expected a non-empty array");
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    cfg.vertices.push_back(static_cast<VertexId>(
        as_integer(vertices[i], "graph.vertices[" + std::to_string(i) + "]")));
  }
  const json& edges = field(graph, "graph", "edges");
  if (!edges.is_array()) fail("graph.edges", "expected an array");
  for (size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "graph.edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2) fail(path, "expected a pair [v, w]");
    cfg.edges.push_back(make_edge(static_cast<VertexId>(as_integer(e[0], path + "[0]")),
                                  static_cast<VertexId>(as_integer(e[1], path + "[1]"))));
  }
  std::sort(cfg.edges.begin(), cfg.edges.end());
  cfg.edges.erase(std::unique(cfg.edges.begin(), cfg.edges.end()), cfg.edges.end());

  // The costs in the file follow the order of graph.vertices; internally both
  // are kept sorted by vertex id.
  std::vector<VertexId> listed_vertices = cfg.vertices;
  std::sort(cfg.vertices.begin(), cfg.vertices.end());
  if (std::adjacent_find(cfg.vertices.begin(), cfg.vertices.end()) != cfg.vertices.end()) {
    fail("graph.vertices", "duplicate vertex id");
  }

  if (root.contains("cover")) {
    const json& cover = root["cover"];
    if (!cover.is_object()) fail("cover", "expected an object");
    const std::string mode = as_string(field(cover, "cover", "mode"), "cover.mode");
    if (mode == "full") {
      cfg.cover_mode = CoverMode::Full;
    } else if (mode == "edges") {
      cfg.cover_mode = CoverMode::Edges;
    } else if (mode == "custom") {
      cfg.cover_mode = CoverMode::Custom;
      const json& sets = field(cover, "cover", "sets");
      if (!sets.is_array() || sets.empty()) fail("cover.sets", "expected a non-empty array");
      for (size_t l = 0; l < sets.size(); ++l) {
        const std::string path = "cover.sets[" + std::to_string(l) + "]";
        if (!sets[l].is_array() || sets[l].empty()) fail(path, "expected a non-empty array");
        std::vector<VertexId> members;
        for (size_t i = 0; i < sets[l].size(); ++i) {
          members.push_back(static_cast<VertexId>(
              as_integer(sets[l][i], path + "[" + std::to_string(i) + "]")));
        }
        cfg.custom_sets.push_back(std::move(members));
      }
    } else {
      fail("cover.mode", "expected full | edges | custom");
    }
  }

  if (root.contains("dimension")) {
    cfg.dim = static_cast<int>(as_integer(root["dimension"], "dimension"));
  }

  const json& costs = field(root, "$", "costs");
  if (!costs.is_array()) fail("costs", "expected an array");
  if (costs.size() != cfg.vertices.size()) {
    fail("costs", "expected one entry per vertex (" +
                      std::to_string(cfg.vertices.size()) + "), got " +
                      std::to_string(costs.size()));
  }
  {
    // reorder file order -> sorted vertex order
    std::vector<CostSpec> parsed(costs.size());
    for (size_t i = 0; i < costs.size(); ++i) {
      parsed[i] = parse_cost(costs[i], "costs[" + std::to_string(i) + "]");
    }
    cfg.costs.resize(parsed.size());
    for (size_t i = 0; i < parsed.size(); ++i) {
      const auto it = std::lower_bound(cfg.vertices.begin(), cfg.vertices.end(),
                                       listed_vertices[i]);
      cfg.costs[static_cast<size_t>(it - cfg.vertices.begin())] = std::move(parsed[i]);
    }
  }

  if (root.contains("algorithm")) {
    cfg.algorithm = algorithm_from_string(as_string(root["algorithm"], "algorithm"));
  }
  if (root.contains("rho")) cfg.rho = as_number(root["rho"], "rho");
  if (root.contains("gamma0")) cfg.gamma0 = as_number(root["gamma0"], "gamma0");

  if (root.contains("activation")) {
    const json& activation = root["activation"];
    if (!activation.is_object()) fail("activation", "expected an object");
    const std::string mode =
        as_string(field(activation, "activation", "mode"), "activation.mode");
    if (mode == "uniform") {
      cfg.activation_mode = ActivationMode::Uniform;
    } else if (mode == "explicit") {
      cfg.activation_mode = ActivationMode::Explicit;
      cfg.activation_p =
          as_double_list(field(activation, "activation", "p"), "activation.p");
    } else if (mode == "node-wakeup") {
      cfg.activation_mode = ActivationMode::NodeWakeup;
      if (activation.contains("q")) {
        cfg.wake_q = as_double_list(activation["q"], "activation.q");
      }
    } else {
      fail("activation.mode", "expected uniform | explicit | node-wakeup");
    }
  }

  if (root.contains("budget")) cfg.budget = as_integer(root["budget"], "budget");
  if (root.contains("record_every")) {
    cfg.record_every = as_integer(root["record_every"], "record_every");
  }
  if (root.contains("stop_squared_error")) {
    cfg.stop_squared_error = as_number(root["stop_squared_error"], "stop_squared_error");
  }
  if (root.contains("seed")) {
    const json& seed = root["seed"];
    if (!seed.is_number_integer() && !seed.is_number_unsigned()) {
      fail("seed", "expected an integer");
    }
    cfg.seed = seed.get<std::uint64_t>();
  }

  if (root.contains("init")) {
    const json& init = root["init"];
    if (!init.is_object()) fail("init", "expected an object");
    if (init.contains("x")) {
      const json& x = init["x"];
      if (!x.is_array()) fail("init.x", "expected an array of points");
      for (size_t i = 0; i < x.size(); ++i) {
        const Point p = as_point(x[i], "init.x[" + std::to_string(i) + "]");
        cfg.init.x.insert(cfg.init.x.end(), p.begin(), p.end());
      }
    }
    if (init.contains("lambda")) {
      const json& lambda = init["lambda"];
      if (!lambda.is_array()) fail("init.lambda", "expected an array per component");
      for (size_t l = 0; l < lambda.size(); ++l) {
        const std::string path = "init.lambda[" + std::to_string(l) + "]";
        if (!lambda[l].is_array()) fail(path, "expected an array of points");
        std::vector<double> block;
        for (size_t i = 0; i < lambda[l].size(); ++i) {
          const Point p = as_point(lambda[l][i], path + "[" + std::to_string(i) + "]");
          block.insert(block.end(), p.begin(), p.end());
        }
        cfg.init.lambda.push_back(std::move(block));
      }
    }
    if (init.contains("zbar")) {
      const json& zbar = init["zbar"];
      if (!zbar.is_array()) fail("init.zbar", "expected an array of points");
      for (size_t l = 0; l < zbar.size(); ++l) {
        cfg.init.zbar.push_back(as_point(zbar[l], "init.zbar[" + std::to_string(l) + "]"));
      }
    }
  }

  return cfg;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw Error(ErrorCode::ConfigInvalid, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_config_json(buffer.str());
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json root;
  root["graph"]["vertices"] = cfg.vertices;
  json edge_list = json::array();
  for (const Edge& e : cfg.edges) edge_list.push_back({e.first, e.second});
  root["graph"]["edges"] = std::move(edge_list);

  switch (cfg.cover_mode) {
    case CoverMode::Full: root["cover"]["mode"] = "full"; break;
    case CoverMode::Edges: root["cover"]["mode"] = "edges"; break;
    case CoverMode::Custom:
      root["cover"]["mode"] = "custom";
      root["cover"]["sets"] = cfg.custom_sets;
      break;
  }

  root["dimension"] = cfg.dim;

  json cost_list = json::array();
  for (const CostSpec& spec : cfg.costs) {
    json c;
    switch (spec.type) {
      case CostSpec::Type::Zero:
        c["type"] = "zero";
        break;
      case CostSpec::Type::Quadratic:
        c["type"] = "quadratic";
        c["a"] = spec.a;
        c["c"] = spec.c;
        break;
      case CostSpec::Type::AbsoluteValue:
        c["type"] = "abs";
        c["c"] = spec.c;
        break;
    }
    cost_list.push_back(std::move(c));
  }
  root["costs"] = std::move(cost_list);

  root["algorithm"] = to_string(cfg.algorithm);
  root["rho"] = cfg.rho;
  root["gamma0"] = cfg.gamma0;

  switch (cfg.activation_mode) {
    case ActivationMode::Uniform:
      root["activation"]["mode"] = "uniform";
      break;
    case ActivationMode::Explicit:
      root["activation"]["mode"] = "explicit";
      root["activation"]["p"] = cfg.activation_p;
      break;
    case ActivationMode::NodeWakeup:
      root["activation"]["mode"] = "node-wakeup";
      if (!cfg.wake_q.empty()) root["activation"]["q"] = cfg.wake_q;
      break;
  }

  root["budget"] = cfg.budget;
  root["record_every"] = cfg.record_every;
  if (cfg.stop_squared_error) root["stop_squared_error"] = *cfg.stop_squared_error;
  root["seed"] = cfg.seed;

  if (!cfg.init.empty()) {
    if (!cfg.init.x.empty()) {
      json points = json::array();
      for (size_t i = 0; i + static_cast<size_t>(cfg.dim) <= cfg.init.x.size();
           i += static_cast<size_t>(cfg.dim)) {
        points.push_back(std::vector<double>(
            cfg.init.x.begin() + static_cast<std::ptrdiff_t>(i),
            cfg.init.x.begin() + static_cast<std::ptrdiff_t>(i + cfg.dim)));
      }
      root["init"]["x"] = std::move(points);
    }
    if (!cfg.init.lambda.empty()) {
      json blocks = json::array();
      for (const auto& block : cfg.init.lambda) {
        json entries = json::array();
        for (size_t i = 0; i + static_cast<size_t>(cfg.dim) <= block.size();
             i += static_cast<size_t>(cfg.dim)) {
          entries.push_back(std::vector<double>(
              block.begin() + static_cast<std::ptrdiff_t>(i),
              block.begin() + static_cast<std::ptrdiff_t>(i + cfg.dim)));
        }
        blocks.push_back(std::move(entries));
      }
      root["init"]["lambda"] = std::move(blocks);
    }
    if (!cfg.init.zbar.empty()) root["init"]["zbar"] = cfg.init.zbar;
  }

  return root.dump(2) + "\n";
}

}  // namespace randprox
