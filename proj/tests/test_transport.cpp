#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hycurv/transport.hpp"

using namespace hycurv;

namespace {

TransportProblem random_problem(int rows, int cols, std::mt19937_64& rng,
                                bool integer_costs) {
  std::uniform_real_distribution<double> mass(0.05, 1.0);
  std::uniform_real_distribution<double> rcost(0.0, 5.0);
  std::uniform_int_distribution<int> icost(0, 5);
  TransportProblem p;
  p.mu.resize(rows);
  p.nu.resize(cols);
  double su = 0.0, sv = 0.0;
  for (double& x : p.mu) su += (x = mass(rng));
  for (double& x : p.nu) sv += (x = mass(rng));
  for (double& x : p.mu) x /= su;
  for (double& x : p.nu) x /= sv;
  p.cost.assign(rows, std::vector<double>(cols));
  for (auto& row : p.cost) {
    for (double& c : row) c = integer_costs ? icost(rng) : rcost(rng);
  }
  return p;
}

TransportProblem transpose(const TransportProblem& p) {
  TransportProblem q;
  q.mu = p.nu;
  q.nu = p.mu;
  q.cost.assign(p.nu.size(), std::vector<double>(p.mu.size()));
  for (std::size_t i = 0; i < p.mu.size(); ++i) {
    for (std::size_t j = 0; j < p.nu.size(); ++j) q.cost[j][i] = p.cost[i][j];
  }
  return q;
}

}  // namespace

TEST_CASE("point mass to point mass costs the ground distance") {
  TransportProblem p{{1.0}, {1.0}, {{3.0}}};
  CHECK(wasserstein1(p) == doctest::Approx(3.0));
}

TEST_CASE("identical measures under a metric with zero diagonal cost nothing") {
  TransportProblem p{{0.5, 0.5}, {0.5, 0.5}, {{0.0, 1.0}, {1.0, 0.0}}};
  CHECK(wasserstein1(p) == doctest::Approx(0.0));
}

TEST_CASE("two-point shift") {
  // move 0.3 across distance 1
  TransportProblem p{{0.8, 0.2}, {0.5, 0.5}, {{0.0, 1.0}, {1.0, 0.0}}};
  CHECK(wasserstein1(p) == doctest::Approx(0.3));
}

TEST_CASE("3x2 hand-solved instance") {
  // optimum: route all of nu[1]'s demand from the cheap rows
  TransportProblem p{{0.2, 0.3, 0.5},
                     {0.6, 0.4},
                     {{1.0, 2.0}, {3.0, 1.0}, {2.0, 4.0}}};
  // x11=0.1, x12=0.1, x22=0.3, x31=0.5: 0.1+0.2+0.3+1.0 = 1.6
  CHECK(wasserstein1(p) == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("plan satisfies both marginals and prices the reported value") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    const TransportProblem p = random_problem(1 + t % 5, 1 + (t / 5) % 5, rng,
                                              false);
    const TransportPlan plan = wasserstein1_plan(p);
    double priced = 0.0;
    for (std::size_t i = 0; i < p.mu.size(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < p.nu.size(); ++j) {
        CHECK(plan.flow[i][j] >= -1e-12);
        row += plan.flow[i][j];
        priced += plan.flow[i][j] * p.cost[i][j];
      }
      CHECK(row == doctest::Approx(p.mu[i]).epsilon(1e-9));
    }
    for (std::size_t j = 0; j < p.nu.size(); ++j) {
      double col = 0.0;
      for (std::size_t i = 0; i < p.mu.size(); ++i) col += plan.flow[i][j];
      CHECK(col == doctest::Approx(p.nu[j]).epsilon(1e-9));
    }
    CHECK(priced == doctest::Approx(plan.value).epsilon(1e-9));
  }
}

TEST_CASE("solver agrees with the independent simplex oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 300; ++t) {
    const TransportProblem p =
        random_problem(dim(rng), dim(rng), rng, t % 2 == 0);
    const double fast = wasserstein1(p);
    const double slow = w1_oracle_small(p);
    CHECK(std::abs(fast - slow) < 1e-9);
  }
}

TEST_CASE("symmetric under transposition") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const TransportProblem p = random_problem(2 + t % 4, 2 + (t / 4) % 4, rng,
                                              false);
    CHECK(wasserstein1(p) ==
          doctest::Approx(wasserstein1(transpose(p))).epsilon(1e-9));
  }
}

TEST_CASE("lower bound: W1 >= min cost, <= cost of the independent coupling") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const TransportProblem p = random_problem(3, 4, rng, false);
    double lo = p.cost[0][0], product = 0.0;
    for (std::size_t i = 0; i < p.mu.size(); ++i) {
      for (std::size_t j = 0; j < p.nu.size(); ++j) {
        lo = std::min(lo, p.cost[i][j]);
        product += p.mu[i] * p.nu[j] * p.cost[i][j];
      }
    }
    const double w = wasserstein1(p);
    CHECK(w >= lo - 1e-12);
    CHECK(w <= product + 1e-12);
  }
}

TEST_CASE("input validation") {
  SUBCASE("mass mismatch") {
    TransportProblem p{{0.7}, {1.0}, {{1.0}}};
    CHECK_THROWS_AS(wasserstein1(p), std::invalid_argument);
  }
  SUBCASE("non-finite cost") {
    TransportProblem p{{1.0}, {1.0}, {{std::nan("")}}};
    CHECK_THROWS_AS(wasserstein1(p), std::invalid_argument);
  }
  SUBCASE("shape mismatch") {
    TransportProblem p{{0.5, 0.5}, {1.0}, {{1.0}}};
    CHECK_THROWS_AS(wasserstein1(p), std::invalid_argument);
  }
}
