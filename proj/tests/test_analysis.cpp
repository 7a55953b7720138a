#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "hycurv/analysis.hpp"
#include "hycurv/generators.hpp"

using namespace hycurv;

TEST_CASE("histogram bin counts and ranges") {
  CHECK(histogram_bins(Method::kHlrc) == 40);
  CHECK(histogram_bins(Method::kHorc) == 60);
  CHECK_THROWS_AS(histogram_bins(Method::kHfrc), std::invalid_argument);

  const CurvatureHistogram h = curvature_histogram({0.0}, Method::kHorc);
  CHECK(h.range_lo == -2.0);
  CHECK(h.range_hi == doctest::Approx(1.0));
}

TEST_CASE("histogram bin placement, (lo, hi] convention") {
  const CurvatureHistogram h =
      curvature_histogram({1.0, 0.0, 0.01, -0.999, -1.0 + 1e-9}, Method::kHlrc);
  CHECK(h.freq[39] == doctest::Approx(0.2));  // 1.0 lands in the top bin
  CHECK(h.freq[19] == doctest::Approx(0.2));  // 0.0 in (-0.05, 0]
  CHECK(h.freq[20] == doctest::Approx(0.2));  // 0.01 in (0, 0.05]
  CHECK(h.freq[0] == doctest::Approx(0.4));   // both values near -1
  double total = 0.0;
  for (double f : h.freq) total += f;
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("histogram ignores NaN and flags the all-NaN case") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const CurvatureHistogram h = curvature_histogram({nan, 0.5, nan}, Method::kHlrc);
  CHECK(!h.empty);
  CHECK(h.freq[29] == doctest::Approx(1.0));
  CHECK(curvature_histogram({nan}, Method::kHlrc).empty);
  CHECK(curvature_histogram({}, Method::kHorc).empty);
}

TEST_CASE("rbf kernel") {
  std::vector<std::vector<double>> rows(3, std::vector<double>(40, 0.0));
  rows[0][0] = 1.0;
  rows[1][1] = 1.0;
  rows[2][0] = 1.0;
  const KernelMatrix km = rbf_kernel(rows);
  CHECK(km.gamma == doctest::Approx(1.0 / 40.0));
  for (int i = 0; i < 3; ++i) CHECK(km.k[i][i] == 1.0);
  CHECK(km.k[0][2] == doctest::Approx(1.0));  // identical rows
  CHECK(km.k[0][1] == doctest::Approx(std::exp(-2.0 / 40.0)));
  CHECK(km.k[0][1] == km.k[1][0]);
  CHECK_THROWS_AS(rbf_kernel({}), std::invalid_argument);
  CHECK_THROWS_AS(rbf_kernel({{1.0}, {1.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("kpca on a 2x2 kernel has a closed form") {
  // centered [[1,c],[c,1]] has eigenvalue 1-c on (1,-1)/sqrt(2)
  const double c = 0.3;
  KernelMatrix km;
  km.k = {{1.0, c}, {c, 1.0}};
  const Embedding2D emb = kpca_2d(km);
  const double expect = std::sqrt((1.0 - c) / 2.0);
  CHECK(emb.eigenvalues[0] == doctest::Approx(1.0 - c));
  CHECK(std::abs(emb.points[0][0]) == doctest::Approx(expect));
  CHECK(emb.points[0][0] == doctest::Approx(-emb.points[1][0]));
  CHECK(std::max(emb.points[0][0], emb.points[1][0]) > 0.0);  // sign rule
  CHECK(emb.degenerate);  // only one positive eigenvalue
}

TEST_CASE("kpca separates identical-row groups") {
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 4; ++i) rows.push_back({1.0, 0.0, 0.0});
  for (int i = 0; i < 4; ++i) rows.push_back({0.0, 1.0, 0.0});
  const Embedding2D emb = kpca_2d(rbf_kernel(rows));
  for (int i = 1; i < 4; ++i) {
    CHECK(emb.points[i][0] == doctest::Approx(emb.points[0][0]));
    CHECK(emb.points[4 + i][0] == doctest::Approx(emb.points[4][0]));
  }
  CHECK(std::abs(emb.points[0][0] - emb.points[4][0]) > 0.1);
}

TEST_CASE("kmeans recovers well-separated planted clusters") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::vector<std::array<double, 2>> pts;
  std::vector<int> truth;
  const std::array<std::array<double, 2>, 3> centers{
      {{0.0, 0.0}, {5.0, 0.0}, {0.0, 5.0}}};
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 20; ++i) {
      pts.push_back({centers[c][0] + noise(rng), centers[c][1] + noise(rng)});
      truth.push_back(c);
    }
  }
  const std::vector<int> labels = kmeans(pts, 3, 123);
  CHECK(adjusted_rand_index(labels, truth) == doctest::Approx(1.0));
  CHECK_THROWS_AS(kmeans(pts, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(kmeans({{0.0, 0.0}}, 2, 1), std::invalid_argument);
}

TEST_CASE("adjusted rand index hand values") {
  CHECK(adjusted_rand_index({0, 0, 1, 1}, {0, 0, 1, 1}) == doctest::Approx(1.0));
  CHECK(adjusted_rand_index({0, 0, 1, 1}, {1, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(adjusted_rand_index({0, 0, 1, 1}, {0, 1, 0, 1}) == doctest::Approx(-0.5));
  CHECK(adjusted_rand_index({0, 0, 1, 1}, {0, 0, 1, 2}) ==
        doctest::Approx(4.0 / 7.0));
  // both trivial partitions
  CHECK(adjusted_rand_index({0, 0, 0}, {5, 5, 5}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(adjusted_rand_index({0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(adjusted_rand_index({0, 1}, {0}), std::invalid_argument);
}

TEST_CASE("adjusted mutual info basics") {
  CHECK(adjusted_mutual_info({0, 0, 1, 1}, {1, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(adjusted_mutual_info({0, 0, 0, 0}, {1, 1, 1, 1}) == doctest::Approx(1.0));
  const double v = adjusted_mutual_info({0, 0, 1, 1, 2, 2}, {0, 1, 0, 1, 2, 2});
  CHECK(v < 1.0);
  CHECK(v > -1.0);
  // symmetry and label-permutation invariance
  CHECK(adjusted_mutual_info({0, 0, 1, 1, 2, 2}, {0, 1, 0, 1, 2, 2}) ==
        doctest::Approx(adjusted_mutual_info({0, 1, 0, 1, 2, 2},
                                             {0, 0, 1, 1, 2, 2})));
  CHECK(adjusted_mutual_info({0, 0, 1, 1, 2, 2}, {0, 1, 0, 1, 2, 2}) ==
        doctest::Approx(adjusted_mutual_info({7, 7, 3, 3, 9, 9},
                                             {0, 1, 0, 1, 2, 2})));
}

TEST_CASE("expected mutual info matches a permutation Monte Carlo") {
  const std::vector<int> x{0, 0, 0, 1, 1, 2, 2, 2};
  std::vector<int> y{0, 0, 1, 1, 1, 1, 2, 2};
  const int n = 8;
  const std::vector<int> am{3, 2, 3}, bm{2, 4, 2};
  const double emi = expected_mutual_info(am, bm, n);

  auto mutual_info = [&](const std::vector<int>& a, const std::vector<int>& b) {
    double counts[3][3] = {};
    for (int i = 0; i < n; ++i) counts[a[i]][b[i]] += 1.0;
    double mi = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (counts[i][j] == 0.0) continue;
        mi += (counts[i][j] / n) *
              std::log(counts[i][j] * n / (am[i] * static_cast<double>(bm[j])));
      }
    }
    return mi;
  };

  std::mt19937_64 rng(31);
  const int reps = 20000;
  double mean = 0.0, m2 = 0.0;
  for (int t = 1; t <= reps; ++t) {
    std::shuffle(y.begin(), y.end(), rng);
    const double mi = mutual_info(x, y);
    const double d = mi - mean;
    mean += d / t;
    m2 += d * (mi - mean);
  }
  const double se = std::sqrt(m2 / (reps - 1) / reps);
  CHECK(std::abs(mean - emi) < 3.0 * se + 1e-12);
}

TEST_CASE("wilcoxon rank-sum") {
  SUBCASE("fully separated samples") {
    const WilcoxonResult r = wilcoxon_rank_sum({1, 2, 3}, {10, 11, 12});
    CHECK(r.statistic == 0.0);
    CHECK(std::abs(r.two_sided_p - 0.1) < 0.05);  // exact p is 0.1
  }
  SUBCASE("U statistics of the two orderings sum to na*nb") {
    const std::vector<double> a{1.5, 3.2, 0.4, 7.7}, b{2.2, 5.0, 0.1};
    const WilcoxonResult r1 = wilcoxon_rank_sum(a, b);
    const WilcoxonResult r2 = wilcoxon_rank_sum(b, a);
    CHECK(r1.statistic + r2.statistic == doctest::Approx(12.0));
    CHECK(r1.two_sided_p == doctest::Approx(r2.two_sided_p));
  }
  SUBCASE("midranks under ties") {
    // pooled {1,1,1,2,2,2}: the three 1s share rank 2, the 2s share rank 5
    const WilcoxonResult r = wilcoxon_rank_sum({1, 1, 2}, {1, 2, 2});
    CHECK(r.statistic == doctest::Approx(3.0));
  }
  SUBCASE("identical constant samples give p = 1") {
    const WilcoxonResult r = wilcoxon_rank_sum({2, 2, 2}, {2, 2});
    CHECK(r.two_sided_p == 1.0);
  }
  SUBCASE("large shifted samples are overwhelmingly significant") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> na(0.0, 1.0), nb(3.0, 1.0);
    std::vector<double> a, b;
    for (int i = 0; i < 100; ++i) {
      a.push_back(na(rng));
      b.push_back(nb(rng));
    }
    CHECK(wilcoxon_rank_sum(a, b).two_sided_p < 1e-6);
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(wilcoxon_rank_sum({}, {1.0}), std::invalid_argument);
  }
}

TEST_CASE("cluster pipeline separates structurally distinct families") {
  std::vector<Hypergraph> collection;
  std::vector<int> truth;
  for (int i = 0; i < 5; ++i) {
    collection.push_back(gen_complete(6 + i, 3));
    truth.push_back(0);
  }
  for (int i = 0; i < 5; ++i) {
    collection.push_back(gen_hypergrid(3 + i));
    truth.push_back(1);
  }
  const PipelineResult res =
      cluster_pipeline(collection, Method::kHlrc, 2, 42, &truth);
  REQUIRE(res.scores.has_value());
  CHECK(res.scores->ari == doctest::Approx(1.0));
  CHECK(res.scores->ami == doctest::Approx(1.0));
  CHECK(res.histograms.size() == 10);
  CHECK(res.labels.size() == 10);
}

TEST_CASE("cluster pipeline input validation") {
  const std::vector<Hypergraph> one{gen_complete(5, 3)};
  CHECK_THROWS_AS(cluster_pipeline({}, Method::kHlrc, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(cluster_pipeline(one, Method::kHfrc, 1, 0),
                  std::invalid_argument);
  const std::vector<int> wrong{0, 1};
  CHECK_THROWS_AS(cluster_pipeline(one, Method::kHlrc, 1, 0, &wrong),
                  std::invalid_argument);
}
