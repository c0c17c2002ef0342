#include "randprox/activation.hpp"

#include <cmath>
#include <numeric>

namespace randprox {

ActivationProcess::ActivationProcess(std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) {
    throw Error(ErrorCode::InvalidDistribution, "activation law is empty");
  }
  double sum = 0.0;
  for (size_t l = 0; l < p_.size(); ++l) {
    if (!(p_[l] > 0.0) || !std::isfinite(p_[l])) {
      throw Error(ErrorCode::InvalidDistribution,
                  "activation probability p[" + std::to_string(l) + "] must be > 0");
    }
    sum += p_[l];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidDistribution,
                "activation probabilities sum to " + std::to_string(sum));
  }
  cumulative_.resize(p_.size());
  double acc = 0.0;
  for (size_t l = 0; l < p_.size(); ++l) {
    acc += p_[l];
    cumulative_[l] = acc;
  }
}

ActivationProcess ActivationProcess::uniform(int component_count) {
  if (component_count <= 0) {
    throw Error(ErrorCode::InvalidDistribution, "uniform law needs >= 1 component");
  }
  return ActivationProcess(
      std::vector<double>(static_cast<size_t>(component_count),
                          1.0 / component_count));
}

int ActivationProcess::draw(SplitMix64& rng) const {
  const double u = rng.next_double() * cumulative_.back();
  for (size_t l = 0; l < cumulative_.size(); ++l) {
    if (u < cumulative_[l]) return static_cast<int>(l);
  }
  return static_cast<int>(cumulative_.size()) - 1;
}

ActivationProcess node_wakeup_law(const Graph& g, const std::vector<double>& q) {
  if (q.size() != static_cast<size_t>(g.vertex_count())) {
    throw Error(ErrorCode::InvalidQ, "q must have one entry per vertex");
  }
  double sum = 0.0;
  for (size_t i = 0; i < q.size(); ++i) {
    if (!(q[i] > 0.0) || !std::isfinite(q[i])) {
      throw Error(ErrorCode::InvalidQ, "q[" + std::to_string(i) + "] must be > 0");
    }
    sum += q[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidQ, "wake probabilities sum to " + std::to_string(sum));
  }
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "node wakeup needs at least one edge");
  }

  std::vector<double> p;
  p.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    const double qv = q[static_cast<size_t>(g.index_of(e.first))];
    const double qw = q[static_cast<size_t>(g.index_of(e.second))];
    const double nv = g.degree(e.first);
    const double nw = g.degree(e.second);
    // single-division form of q_v/nv + q_w/nw
    p.push_back((qv * nw + qw * nv) / (nv * nw));
  }
  return ActivationProcess(std::move(p));
}

}  // namespace randprox
