#include "hycurv/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

namespace hycurv {

namespace {
constexpr double kBinWidth = 0.05;

double range_lo(Method m) { return m == Method::kHorc ? -2.0 : -1.0; }

std::vector<int> compact_labels(const std::vector<int>& x) {
  std::map<int, int> remap;
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = remap.emplace(x[i], static_cast<int>(remap.size())).first->second;
  }
  return out;
}

// contingency table plus marginals for a pair of labelings
struct Contingency {
  std::vector<std::vector<long long>> n;
  std::vector<long long> a, b;
  long long total = 0;
};

Contingency contingency_table(const std::vector<int>& x,
                              const std::vector<int>& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("label vectors must have equal length");
  }
  auto cx = compact_labels(x);
  auto cy = compact_labels(y);
  const int r = cx.empty() ? 0 : *std::max_element(cx.begin(), cx.end()) + 1;
  const int c = cy.empty() ? 0 : *std::max_element(cy.begin(), cy.end()) + 1;
  Contingency t;
  t.n.assign(r, std::vector<long long>(c, 0));
  t.a.assign(r, 0);
  t.b.assign(c, 0);
  t.total = static_cast<long long>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    ++t.n[cx[i]][cy[i]];
    ++t.a[cx[i]];
    ++t.b[cy[i]];
  }
  return t;
}

double choose2(long long v) { return 0.5 * static_cast<double>(v) * (v - 1); }

}  // namespace

int histogram_bins(Method method) {
  switch (method) {
    case Method::kHlrc: return 40;
    case Method::kHorc: return 60;
    default:
      throw std::invalid_argument("histograms are defined for HLRC and HORC only");
  }
}

CurvatureHistogram curvature_histogram(const std::vector<double>& values,
                                       Method method) {
  const int bins = histogram_bins(method);
  CurvatureHistogram h;
  h.method = method;
  h.range_lo = range_lo(method);
  h.range_hi = h.range_lo + bins * kBinWidth;
  h.freq.assign(bins, 0.0);

  long long count = 0;
  for (double v : values) {
    if (std::isnan(v)) continue;
    // bins are (lo, hi]; the lowest bin additionally absorbs v == lo
    int idx = static_cast<int>(std::ceil((v - h.range_lo) / kBinWidth)) - 1;
    idx = std::clamp(idx, 0, bins - 1);
    h.freq[idx] += 1.0;
    ++count;
  }
  if (count == 0) {
    h.empty = true;
    return h;
  }
  for (double& f : h.freq) f /= static_cast<double>(count);
  return h;
}

KernelMatrix rbf_kernel(const std::vector<std::vector<double>>& histograms) {
  const int n = static_cast<int>(histograms.size());
  if (n == 0) throw std::invalid_argument("rbf_kernel: empty input");
  const std::size_t b = histograms[0].size();
  for (const auto& row : histograms) {
    if (row.size() != b) throw std::invalid_argument("rbf_kernel: ragged rows");
  }
  KernelMatrix km;
  km.gamma = 1.0 / static_cast<double>(b);
  km.k.assign(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t t = 0; t < b; ++t) {
        const double d = histograms[i][t] - histograms[j][t];
        sq += d * d;
      }
      km.k[i][j] = km.k[j][i] = std::exp(-km.gamma * sq);
    }
  }
  return km;
}

Embedding2D kpca_2d(const KernelMatrix& kernel) {
  const int n = static_cast<int>(kernel.k.size());
  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) k(i, j) = kernel.k[i][j];
  }
  k = 0.5 * (k + k.transpose()).eval();
  const Eigen::MatrixXd centering =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  const Eigen::MatrixXd centered = centering * k * centering;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(centered);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("kpca_2d: eigendecomposition failed");
  }

  Embedding2D emb;
  emb.points.assign(n, {0.0, 0.0});
  int out = 0;
  for (int c = n - 1; c >= 0 && out < 2; --c) {  // eigenvalues ascend in Eigen
    const double lambda = solver.eigenvalues()(c);
    if (lambda <= 1e-12) break;
    Eigen::VectorXd score = solver.eigenvectors().col(c) * std::sqrt(lambda);
    int arg = 0;
    for (int i = 1; i < n; ++i) {
      if (std::abs(score(i)) > std::abs(score(arg))) arg = i;
    }
    if (score(arg) < 0.0) score = -score;
    for (int i = 0; i < n; ++i) emb.points[i][out] = score(i);
    emb.eigenvalues[out] = lambda;
    ++out;
  }
  emb.degenerate = out < 2;
  return emb;
}

std::vector<int> kmeans(const std::vector<std::array<double, 2>>& points, int k,
                        std::uint64_t seed) {
  const int n = static_cast<int>(points.size());
  if (k < 1 || k > n) throw std::invalid_argument("kmeans requires 1 <= k <= n");
  std::mt19937_64 rng(seed);

  auto sqdist = [](const std::array<double, 2>& p, const std::array<double, 2>& q) {
    const double dx = p[0] - q[0], dy = p[1] - q[1];
    return dx * dx + dy * dy;
  };

  std::vector<int> best_labels(n, 0);
  double best_inertia = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < 10; ++restart) {
    // k-means++ seeding
    std::vector<std::array<double, 2>> centers;
    centers.push_back(points[std::uniform_int_distribution<int>(0, n - 1)(rng)]);
    std::vector<double> d2(n);
    while (static_cast<int>(centers.size()) < k) {
      double total = 0.0;
      for (int i = 0; i < n; ++i) {
        d2[i] = std::numeric_limits<double>::infinity();
        for (const auto& c : centers) d2[i] = std::min(d2[i], sqdist(points[i], c));
        total += d2[i];
      }
      int next = 0;
      if (total > 0.0) {
        double t = std::uniform_real_distribution<double>(0.0, total)(rng);
        for (int i = 0; i < n; ++i) {
          t -= d2[i];
          if (t <= 0.0) {
            next = i;
            break;
          }
        }
      } else {
        next = std::uniform_int_distribution<int>(0, n - 1)(rng);
      }
      centers.push_back(points[next]);
    }

    std::vector<int> labels(n, -1);
    for (int iter = 0; iter < 300; ++iter) {
      bool changed = false;
      for (int i = 0; i < n; ++i) {
        int arg = 0;
        double best = sqdist(points[i], centers[0]);
        for (int c = 1; c < k; ++c) {
          const double d = sqdist(points[i], centers[c]);
          if (d < best) {
            best = d;
            arg = c;
          }
        }
        if (labels[i] != arg) {
          labels[i] = arg;
          changed = true;
        }
      }
      std::vector<std::array<double, 2>> sums(k, {0.0, 0.0});
      std::vector<int> counts(k, 0);
      for (int i = 0; i < n; ++i) {
        sums[labels[i]][0] += points[i][0];
        sums[labels[i]][1] += points[i][1];
        ++counts[labels[i]];
      }
      for (int c = 0; c < k; ++c) {
        if (counts[c] > 0) {
          centers[c] = {sums[c][0] / counts[c], sums[c][1] / counts[c]};
        } else {
          // reseed the empty cluster at the point farthest from its center
          int far = 0;
          double far_d = -1.0;
          for (int i = 0; i < n; ++i) {
            const double d = sqdist(points[i], centers[labels[i]]);
            if (d > far_d) {
              far_d = d;
              far = i;
            }
          }
          centers[c] = points[far];
          changed = true;
        }
      }
      if (!changed) break;
    }

    double inertia = 0.0;
    for (int i = 0; i < n; ++i) inertia += sqdist(points[i], centers[labels[i]]);
    if (inertia < best_inertia - 1e-15) {
      best_inertia = inertia;
      best_labels = labels;
    }
  }
  return best_labels;
}

double adjusted_rand_index(const std::vector<int>& x, const std::vector<int>& y) {
  const Contingency t = contingency_table(x, y);
  if (t.total < 2) throw std::invalid_argument("need at least 2 points");
  double sum_ij = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (const auto& row : t.n) {
    for (long long v : row) sum_ij += choose2(v);
  }
  for (long long v : t.a) sum_a += choose2(v);
  for (long long v : t.b) sum_b += choose2(v);
  // scaled by C(total, 2) so integer-valued inputs stay exact
  const double total2 = choose2(t.total);
  const double num = sum_ij * total2 - sum_a * sum_b;
  const double denom = 0.5 * (sum_a + sum_b) * total2 - sum_a * sum_b;
  if (std::abs(denom) < 1e-15) return 1.0;  // both partitions trivial
  return num / denom;
}

double expected_mutual_info(const std::vector<int>& row_marginals,
                            const std::vector<int>& col_marginals, int n) {
  double emi = 0.0;
  const double log_n = std::log(static_cast<double>(n));
  for (int ai : row_marginals) {
    for (int bj : col_marginals) {
      const int lo = std::max(1, ai + bj - n);
      const int hi = std::min(ai, bj);
      for (int nij = lo; nij <= hi; ++nij) {
        const double log_term =
            std::log(static_cast<double>(nij)) + log_n -
            std::log(static_cast<double>(ai)) - std::log(static_cast<double>(bj));
        // hypergeometric probability of the cell count nij
        const double log_prob =
            std::lgamma(ai + 1.0) + std::lgamma(bj + 1.0) +
            std::lgamma(n - ai + 1.0) + std::lgamma(n - bj + 1.0) -
            std::lgamma(n + 1.0) - std::lgamma(nij + 1.0) -
            std::lgamma(ai - nij + 1.0) - std::lgamma(bj - nij + 1.0) -
            std::lgamma(n - ai - bj + nij + 1.0);
        emi += (static_cast<double>(nij) / n) * log_term * std::exp(log_prob);
      }
    }
  }
  return emi;
}

double adjusted_mutual_info(const std::vector<int>& x, const std::vector<int>& y) {
  const Contingency t = contingency_table(x, y);
  if (t.total < 2) throw std::invalid_argument("need at least 2 points");
  const double n = static_cast<double>(t.total);
  double mi = 0.0, hx = 0.0, hy = 0.0;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    for (std::size_t j = 0; j < t.b.size(); ++j) {
      const long long nij = t.n[i][j];
      if (nij == 0) continue;
      mi += (nij / n) * std::log(nij * n / (static_cast<double>(t.a[i]) * t.b[j]));
    }
  }
  for (long long a : t.a) {
    if (a > 0) hx -= (a / n) * std::log(a / n);
  }
  for (long long b : t.b) {
    if (b > 0) hy -= (b / n) * std::log(b / n);
  }
  if (hx < 1e-15 && hy < 1e-15) return 1.0;  // both single-cluster

  std::vector<int> am(t.a.begin(), t.a.end()), bm(t.b.begin(), t.b.end());
  const double emi = expected_mutual_info(am, bm, static_cast<int>(t.total));
  const double denom = 0.5 * (hx + hy) - emi;
  if (std::abs(denom) < 1e-15) return 1.0;
  return (mi - emi) / denom;
}

WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("wilcoxon_rank_sum: empty sample");
  }
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  std::vector<std::pair<double, int>> pooled;  // value, sample id
  pooled.reserve(n);
  for (double v : a) pooled.emplace_back(v, 0);
  for (double v : b) pooled.emplace_back(v, 1);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  double rank_sum_a = 0.0;
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && pooled[j].first == pooled[i].first) ++j;
    const double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    for (std::size_t p = i; p < j; ++p) {
      if (pooled[p].second == 0) rank_sum_a += midrank;
    }
    i = j;
  }

  const double u = rank_sum_a - 0.5 * na * (na + 1);
  const double mean = 0.5 * static_cast<double>(na) * nb;
  const double var =
      (static_cast<double>(na) * nb / 12.0) *
      (static_cast<double>(n + 1) -
       tie_term / (static_cast<double>(n) * (static_cast<double>(n) - 1.0)));
  WilcoxonResult res{u, 1.0};
  if (var <= 0.0) return res;  // all values tied
  double z = u - mean;
  if (z > 0.0) z -= 0.5;
  else if (z < 0.0) z += 0.5;
  z /= std::sqrt(var);
  res.two_sided_p = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
  return res;
}

PipelineResult cluster_pipeline(const std::vector<Hypergraph>& collection,
                                Method method, int k, std::uint64_t seed,
                                const std::vector<int>* ground_truth) {
  if (collection.empty()) throw std::invalid_argument("empty collection");
  PipelineResult res;
  std::vector<std::vector<double>> g;
  if (method == Method::kHfrc) {
    throw std::invalid_argument("cluster_pipeline supports HLRC and HORC");
  }
  for (const auto& h : collection) {
    CurvatureVector cv = method == Method::kHorc ? horc_all(h) : hlrc_all(h);
    CurvatureHistogram hist = curvature_histogram(cv.values, method);
    g.push_back(hist.freq);
    res.histograms.push_back(std::move(hist));
  }
  res.embedding = kpca_2d(rbf_kernel(g));
  res.labels = kmeans(res.embedding.points, k, seed);
  if (ground_truth != nullptr) {
    if (ground_truth->size() != collection.size()) {
      throw std::invalid_argument("ground truth size mismatch");
    }
    ClusterScores s;
    s.ari = adjusted_rand_index(res.labels, *ground_truth);
    s.ami = adjusted_mutual_info(res.labels, *ground_truth);
    res.scores = s;
  }
  return res;
}

}  // namespace hycurv
