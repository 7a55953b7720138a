#ifndef HYCURV_TRANSPORT_HPP_
#define HYCURV_TRANSPORT_HPP_

#include <vector>

namespace hycurv {

/// Balanced transportation instance: two probability mass vectors and the
/// pairwise ground costs between their supports.
struct TransportProblem {
  std::vector<double> mu;
  std::vector<double> nu;
  std::vector<std::vector<double>> cost;  // |mu| x |nu|, finite, nonnegative
};

struct TransportPlan {
  double value = 0.0;
  std::vector<std::vector<double>> flow;  // same shape as cost
};

/// Exact 1-Wasserstein distance via min-cost flow (successive shortest paths
/// with potentials). Throws std::invalid_argument on mass mismatch beyond
/// 1e-12 or non-finite costs.
double wasserstein1(const TransportProblem& p);

/// Same solver, but also returns the optimal coupling for marginal checks.
TransportPlan wasserstein1_plan(const TransportProblem& p);

/// Independent verification oracle for tiny instances (supports <= 6): solves
/// the transportation LP with a generic two-phase dense simplex. Test use only.
double w1_oracle_small(const TransportProblem& p);

}  // namespace hycurv

#endif  // HYCURV_TRANSPORT_HPP_
