#ifndef HYCURV_CURVATURE_HPP_
#define HYCURV_CURVATURE_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hycurv/hypergraph.hpp"

namespace hycurv {

enum class Method { kHlrc, kHfrc, kHorc };

std::string method_name(Method m);

/// Per-edge curvature values in edge order. Skipped edges (singletons, and
/// HORC edges touching a disconnected component) carry NaN in `values` and
/// their index in `skipped`.
struct CurvatureVector {
  Method method;
  std::vector<double> values;
  std::set<int> skipped;
};

/// Probability measure on node ids (the one-step random-walk measure).
struct DiscreteMeasure {
  std::vector<int> support;
  std::vector<double> mass;
};

/// Lower Ricci curvature of one edge:
///   sum_v 1/n_v + (n_e + d_e/2 - 1)/max n_v + (n_e + d_e/2 - 1)/min n_v - 1.
/// Requires d_e >= 2.
double hlrc_edge(const NeighborhoodIndex& index, const std::vector<int>& edge,
                 int edge_common_neighbors);

/// Forman curvature of one edge: 2 d_e - sum_v d_v. Requires d_e >= 2.
double hfrc_edge(const NeighborhoodIndex& index, const std::vector<int>& edge);

/// Uniform mass 1/n_v on each neighbor of v, nothing on v itself.
/// Requires n_v >= 1.
DiscreteMeasure random_walk_measure(const NeighborhoodIndex& index, int v);

/// Ollivier curvature of one edge: 1 minus the mean pairwise W1 between the
/// members' random-walk measures, ground metric = clique-expansion hops.
/// Returns nullopt when a required ground distance is infinite.
std::optional<double> horc_edge(const NeighborhoodIndex& index,
                                const DistanceOracle& dist,
                                const std::vector<int>& edge);

CurvatureVector hlrc_all(const Hypergraph& h, int threads = 1);
CurvatureVector hfrc_all(const Hypergraph& h, int threads = 1);
CurvatureVector horc_all(const Hypergraph& h, int threads = 1);

/// Evaluation against a prebuilt index (used by the benchmark harness so
/// index construction is timed separately).
CurvatureVector hlrc_values(const Hypergraph& h, const NeighborhoodIndex& index,
                            int threads = 1);
CurvatureVector hfrc_values(const Hypergraph& h, const NeighborhoodIndex& index,
                            int threads = 1);
CurvatureVector horc_values(const Hypergraph& h, const NeighborhoodIndex& index,
                            int threads = 1);

}  // namespace hycurv

#endif  // HYCURV_CURVATURE_HPP_
