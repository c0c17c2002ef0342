#include <doctest.h>

#include <cmath>

#include "randprox/activation.hpp"
#include "testers.hpp"

using namespace randprox;
using randprox::testing::make_g5;

TEST_CASE("node wakeup law on the reference network") {
  const Graph g = make_g5();
  const std::vector<double> q(5, 1.0 / 5.0);
  const ActivationProcess law = node_wakeup_law(g, q);

  REQUIRE(law.component_count() == 5);
  // canonical edge order: {1,2} {2,3} {3,4} {3,5} {4,5}
  CHECK(law.probabilities()[2] == 1.0 / 6.0);                   // degrees 3 and 2
  CHECK(law.probabilities()[0] == doctest::Approx(0.3).epsilon(1e-15));  // degrees 1 and 2

  double sum = 0.0;
  for (double p : law.probabilities()) sum += p;
  CHECK(std::abs(sum - 1.0) <= 1e-15);
}

TEST_CASE("node wakeup law sums to one for random q") {
  SplitMix64 rng(55);
  const Graph g = make_g5();
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> q(5);
    double total = 0.0;
    for (double& x : q) {
      x = rng.next_double(0.05, 1.0);
      total += x;
    }
    for (double& x : q) x /= total;
    const ActivationProcess law = node_wakeup_law(g, q);
    double sum = 0.0;
    for (double p : law.probabilities()) sum += p;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("node wakeup rejects invalid q") {
  const Graph g = make_g5();
  const auto code_of = [&](const std::vector<double>& q) {
    try {
      node_wakeup_law(g, q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigInvalid;
  };
  CHECK(code_of({0.5, 0.5, 0.0, 0.0, 0.0}) == ErrorCode::InvalidQ);      // zero entries
  CHECK(code_of({0.5, 0.5}) == ErrorCode::InvalidQ);                     // wrong length
  CHECK(code_of({0.5, 0.2, 0.1, 0.1, 0.2}) == ErrorCode::InvalidQ);      // sums to 1.1
}

TEST_CASE("activation process validation") {
  CHECK_NOTHROW(ActivationProcess({0.5, 0.5}));
  CHECK_NOTHROW(ActivationProcess::uniform(7));

  const auto code_of = [](std::vector<double> p) {
    try {
      ActivationProcess law(std::move(p));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigInvalid;
  };
  CHECK(code_of({1.0, 0.0}) == ErrorCode::InvalidDistribution);
  CHECK(code_of({0.4, 0.4}) == ErrorCode::InvalidDistribution);
  CHECK(code_of({}) == ErrorCode::InvalidDistribution);
  CHECK(code_of({0.5, -0.5, 1.0}) == ErrorCode::InvalidDistribution);
}

TEST_CASE("draws are deterministic and follow the law") {
  SUBCASE("degenerate law always picks the single component") {
    const ActivationProcess law({1.0});
    SplitMix64 rng(9);
    for (int i = 0; i < 50; ++i) CHECK(law.draw(rng) == 0);
  }

  SUBCASE("same seed, same sequence") {
    const ActivationProcess law({0.2, 0.3, 0.5});
    SplitMix64 a = SplitMix64::stream(123, 0);
    SplitMix64 b = SplitMix64::stream(123, 0);
    for (int i = 0; i < 200; ++i) CHECK(law.draw(a) == law.draw(b));
  }

  SUBCASE("empirical frequencies over 1e5 draws") {
    const ActivationProcess fair({0.5, 0.5});
    SplitMix64 rng = SplitMix64::stream(7, 0);
    int ones = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) ones += fair.draw(rng);
    CHECK(std::abs(static_cast<double>(ones) / n - 0.5) < 0.01);

    const ActivationProcess skew({0.2, 0.3, 0.5});
    SplitMix64 rng2 = SplitMix64::stream(8, 0);
    std::vector<int> counts(3, 0);
    for (int i = 0; i < n; ++i) counts[static_cast<size_t>(skew.draw(rng2))] += 1;
    for (size_t l = 0; l < 3; ++l) {
      CHECK(std::abs(static_cast<double>(counts[l]) / n - skew.probabilities()[l]) < 0.01);
    }
  }
}
