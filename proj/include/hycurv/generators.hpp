#ifndef HYCURV_GENERATORS_HPP_
#define HYCURV_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hycurv/hypergraph.hpp"

namespace hycurv {

enum class Family { kComplete, kHypercycle, kHypertree, kHypergrid, kHsbm, kChungLu };

enum class EdgeRole { kAny, kTerminal, kNonTerminal };

struct FamilyParams {
  int k = 0;      // uniform edge size
  int s = 0;      // hypercycle intersection size
  int m = 0;      // hypercycle edge count
  int r = 0;      // hypertree regularity
  int depth = 0;  // hypertree depth
  int n = 0;      // complete node count
  std::vector<int> block_sizes;    // HSBM
  double a = 0.0;                  // HSBM within-block probability
  double b = 0.0;                  // HSBM cross-block probability
  std::vector<int> node_degrees;   // Chung-Lu targets
  std::vector<int> edge_sizes;     // Chung-Lu targets
  std::uint64_t seed = 0;
};

struct GroundTruth {
  std::vector<int> node_community;      // HSBM block label per node
  std::vector<bool> edge_intra;         // HSBM: all members in one block
  std::vector<bool> edge_terminal;      // hypertree leaf edges
  std::vector<double> expected_hlrc;    // per edge, when a closed form exists
};

/// All C(n,k) k-subsets as edges, lexicographic order.
Hypergraph gen_complete(int n, int k);

/// k-uniform s-intersecting hypercycle: m windows of width k, step k-s, on a
/// circle of m(k-s) nodes.
Hypergraph gen_hypercycle(int k, int s, int m);

/// k-uniform r-regular 1-intersecting hypertree of the given depth; ground
/// truth marks terminal edges and carries the closed-form HLRC per edge.
std::pair<Hypergraph, GroundTruth> gen_hypertree(int k, int r, int depth);

/// k rows + k columns of a k x k lattice; every node in exactly 2 edges.
Hypergraph gen_hypergrid(int k);

/// k-uniform hypergraph stochastic block model: every k-subset is included
/// with probability a when its members share a block and b otherwise.
/// Deterministic for a fixed seed (one counter-based RNG stream per subset).
std::pair<Hypergraph, GroundTruth> gen_hsbm(const std::vector<int>& block_sizes,
                                            int k, double a, double b,
                                            std::uint64_t seed);

/// Chung-Lu style hypergraph: for each target edge size, members are sampled
/// without replacement with probability proportional to residual target
/// degree. Requires sum(node_degrees) == sum(edge_sizes).
Hypergraph gen_chung_lu(const std::vector<int>& node_degrees,
                        const std::vector<int>& edge_sizes,
                        std::uint64_t seed);

/// Theorem value of HLRC for the special families, or nullopt where the
/// closed form is not available (intermediate hypercycle regimes).
std::optional<double> closed_form_hlrc(Family family, const FamilyParams& params,
                                       EdgeRole role = EdgeRole::kAny);

}  // namespace hycurv

#endif  // HYCURV_GENERATORS_HPP_
