#ifndef HYCURV_ANALYSIS_HPP_
#define HYCURV_ANALYSIS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hycurv/curvature.hpp"
#include "hycurv/hypergraph.hpp"

namespace hycurv {

/// Normalized frequency histogram over the method's curvature range with bin
/// width 0.05: 40 bins on (-1, 1] for HLRC, 60 bins on [-2, 1] for HORC.
/// Bins are (lo, hi] with the lowest bin closed below.
struct CurvatureHistogram {
  Method method;
  double range_lo = 0.0;
  double range_hi = 0.0;
  std::vector<double> freq;
  bool empty = false;

  int bins() const { return static_cast<int>(freq.size()); }
};

int histogram_bins(Method method);  // 40 for HLRC, 60 for HORC

CurvatureHistogram curvature_histogram(const std::vector<double>& values,
                                       Method method);

/// RBF kernel on histogram rows: K_ij = exp(-(1/B) ||G_i - G_j||^2).
struct KernelMatrix {
  std::vector<std::vector<double>> k;
  double gamma = 0.0;
};

KernelMatrix rbf_kernel(const std::vector<std::vector<double>>& histograms);

/// Kernel PCA scores for the two leading components of the double-centered
/// kernel. Sign convention: the largest-magnitude coordinate of each
/// component is nonnegative. When fewer than two positive eigenvalues exist
/// the second coordinate is zero and `degenerate` is set.
struct Embedding2D {
  std::vector<std::array<double, 2>> points;
  std::array<double, 2> eigenvalues{0.0, 0.0};
  bool degenerate = false;
};

Embedding2D kpca_2d(const KernelMatrix& kernel);

/// Lloyd's algorithm with k-means++ seeding, 10 restarts, best inertia kept;
/// empty clusters are reseeded at the farthest point.
std::vector<int> kmeans(const std::vector<std::array<double, 2>>& points, int k,
                        std::uint64_t seed);

double adjusted_rand_index(const std::vector<int>& x, const std::vector<int>& y);
double adjusted_mutual_info(const std::vector<int>& x, const std::vector<int>& y);

/// Expected mutual information under the fixed-marginal permutation model
/// (hypergeometric summation, natural log). Exposed for verification.
double expected_mutual_info(const std::vector<int>& row_marginals,
                            const std::vector<int>& col_marginals, int n);

struct WilcoxonResult {
  double statistic;    // Mann-Whitney U of the first sample
  double two_sided_p;  // normal approximation, tie + continuity corrected
};

WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a,
                                 const std::vector<double>& b);

struct ClusterScores {
  double ari = 0.0;
  double ami = 0.0;
};

struct PipelineResult {
  std::vector<CurvatureHistogram> histograms;
  Embedding2D embedding;
  std::vector<int> labels;
  std::optional<ClusterScores> scores;
};

/// Curvature -> histogram -> RBF kernel -> kPCA -> k-means, with ARI/AMI
/// against ground truth when provided.
PipelineResult cluster_pipeline(const std::vector<Hypergraph>& collection,
                                Method method, int k, std::uint64_t seed,
                                const std::vector<int>* ground_truth = nullptr);

}  // namespace hycurv

#endif  // HYCURV_ANALYSIS_HPP_
