#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hycurv/curvature.hpp"
#include "hycurv/generators.hpp"
#include "hycurv/hypergraph.hpp"
#include "support.hpp"

using namespace hycurv;
using hycurv::testing::random_hypergraph;

TEST_CASE("method_name") {
  CHECK(method_name(Method::kHlrc) == "hlrc");
  CHECK(method_name(Method::kHfrc) == "hfrc");
  CHECK(method_name(Method::kHorc) == "horc");
}

TEST_CASE("hlrc hand examples") {
  SUBCASE("isolated pair: 1/1 + 1/1 + 1 + 1 - 1... = 1") {
    // n_v = 1 each, n_e = 0, d_e = 2: 1 + 1 + 0 + 0 - 1 = 1
    const CurvatureVector cv = hlrc_all(build_hypergraph(2, {{0, 1}}));
    CHECK(cv.values[0] == doctest::Approx(1.0));
  }
  SUBCASE("path middle node: probe edge gets 0") {
    // edge {0,1}: n_0 = 1, n_1 = 2, n_e = 0 -> 1 + 1/2 + 0 + 0 - 1 = 1/2
    const CurvatureVector cv = hlrc_all(build_hypergraph(3, {{0, 1}, {1, 2}}));
    CHECK(cv.values[0] == doctest::Approx(0.5));
  }
  SUBCASE("triangle of pairwise edges") {
    // each edge: n_v = 2, n_e = 1, d_e = 2 -> 1/2 + 1/2 + 1/2 + 1/2 - 1 = 1
    const CurvatureVector cv =
        hlrc_all(build_hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    for (double v : cv.values) CHECK(v == doctest::Approx(1.0));
  }
  SUBCASE("single 4-edge") {
    // n_v = 3, n_e = 0, d_e = 4: 4/3 + 1/3 + 1/3 - 1 = 1
    const CurvatureVector cv = hlrc_all(build_hypergraph(4, {{0, 1, 2, 3}}));
    CHECK(cv.values[0] == doctest::Approx(1.0));
  }
}

TEST_CASE("hlrc stays in (-1, 1] on random hypergraphs") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hypergraph h = random_hypergraph(15, 20, 5, seed);
    const CurvatureVector cv = hlrc_all(h);
    for (int j = 0; j < h.num_edges(); ++j) {
      if (cv.skipped.count(j)) continue;
      CHECK(cv.values[j] > -1.0);
      CHECK(cv.values[j] <= 1.0 + 1e-12);
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("hfrc hand examples and brute force") {
  SUBCASE("complete 3-uniform over 5 nodes: 6 - 3*6 = -12") {
    const CurvatureVector cv = hfrc_all(gen_complete(5, 3));
    for (double v : cv.values) CHECK(v == -12.0);
  }
  SUBCASE("isolated pair: 4 - 2 = 2") {
    const CurvatureVector cv = hfrc_all(build_hypergraph(2, {{0, 1}}));
    CHECK(cv.values[0] == 2.0);
  }
  SUBCASE("matches 2 d_e - sum d_v on random instances") {
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
      const Hypergraph h = random_hypergraph(12, 15, 4, seed);
      const NeighborhoodIndex idx = build_neighborhood_index(h);
      const CurvatureVector cv = hfrc_all(h);
      for (int j = 0; j < h.num_edges(); ++j) {
        double expect = 2.0 * idx.edge_size[j];
        for (int v : h.edges[j]) expect -= idx.node_degree[v];
        CHECK(cv.values[j] == expect);
      }
    }
  }
}

TEST_CASE("random_walk_measure is uniform on the neighborhood") {
  const Hypergraph h = build_hypergraph(4, {{0, 1, 2}, {2, 3}});
  const NeighborhoodIndex idx = build_neighborhood_index(h);
  const DiscreteMeasure m = random_walk_measure(idx, 2);
  CHECK(m.support == std::vector<int>{0, 1, 3});
  const double total = std::accumulate(m.mass.begin(), m.mass.end(), 0.0);
  CHECK(total == doctest::Approx(1.0));
  for (double x : m.mass) CHECK(x == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("horc hand examples") {
  SUBCASE("isolated pair: both walks swap endpoints, W1 = 1, kappa = 0") {
    const CurvatureVector cv = horc_all(build_hypergraph(2, {{0, 1}}));
    CHECK(cv.values[0] == doctest::Approx(0.0));
  }
  SUBCASE("single 3-edge: each pair costs 1/2, kappa = 1/2") {
    const CurvatureVector cv = horc_all(build_hypergraph(3, {{0, 1, 2}}));
    CHECK(cv.values[0] == doctest::Approx(0.5));
  }
  SUBCASE("path edge: kappa = 0") {
    const CurvatureVector cv = horc_all(build_hypergraph(3, {{0, 1}, {1, 2}}));
    CHECK(cv.values[0] == doctest::Approx(0.0));
    CHECK(cv.values[1] == doctest::Approx(0.0));
  }
  SUBCASE("complete 3-uniform over 5 nodes: kappa = 3/4") {
    const CurvatureVector cv = horc_all(gen_complete(5, 3));
    for (double v : cv.values) CHECK(v == doctest::Approx(0.75));
  }
}

TEST_CASE("horc stays in [-2, 1] on random hypergraphs") {
  for (std::uint64_t seed = 200; seed < 215; ++seed) {
    const Hypergraph h = random_hypergraph(12, 14, 4, seed);
    const CurvatureVector cv = horc_all(h);
    for (int j = 0; j < h.num_edges(); ++j) {
      if (cv.skipped.count(j)) continue;
      CHECK(cv.values[j] >= -2.0 - 1e-9);
      CHECK(cv.values[j] <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("singleton edges are skipped with NaN placeholders") {
  const Hypergraph h = build_hypergraph(3, {{0}, {0, 1, 2}});
  for (const CurvatureVector& cv :
       {hlrc_all(h), hfrc_all(h), horc_all(h)}) {
    CHECK(cv.skipped == std::set<int>{0});
    CHECK(std::isnan(cv.values[0]));
    CHECK(!std::isnan(cv.values[1]));
  }
}

TEST_CASE("thread count does not change any value") {
  for (std::uint64_t seed = 300; seed < 305; ++seed) {
    const Hypergraph h = random_hypergraph(15, 18, 4, seed);
    for (auto* fn : {&hlrc_all, &hfrc_all, &horc_all}) {
      const CurvatureVector a = fn(h, 1);
      const CurvatureVector b = fn(h, 4);
      CHECK(a.skipped == b.skipped);
      for (int j = 0; j < h.num_edges(); ++j) {
        if (a.skipped.count(j)) continue;
        CHECK(a.values[j] == b.values[j]);  // bitwise
      }
    }
  }
}

TEST_CASE("prebuilt-index entry points match the convenience wrappers") {
  const Hypergraph h = random_hypergraph(10, 12, 4, 77);
  const NeighborhoodIndex idx = build_neighborhood_index(h);
  CHECK(hlrc_values(h, idx).values == hlrc_all(h).values);
  CHECK(hfrc_values(h, idx).values == hfrc_all(h).values);
}
