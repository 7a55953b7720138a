#ifndef HYCURV_HYPERGRAPH_HPP_
#define HYCURV_HYPERGRAPH_HPP_

#include <string>
#include <unordered_map>
#include <vector>

namespace hycurv {

/// Unweighted undirected hypergraph. Nodes are dense ids in [0, num_nodes);
/// hyperedges are sorted duplicate-free id vectors kept in input order.
/// Duplicate hyperedges are allowed (node degrees count incidences).
struct Hypergraph {
  int num_nodes = 0;
  std::vector<std::vector<int>> edges;
  std::unordered_map<int, std::string> node_labels;
  std::unordered_map<int, std::string> edge_labels;
  // number of duplicate node ids dropped within edges during construction
  int dedup_warnings = 0;

  int num_edges() const { return static_cast<int>(edges.size()); }
};

/// Validates and normalizes raw edge lists. Duplicate ids inside an edge are
/// removed (counted in dedup_warnings); an out-of-range id or an empty edge
/// throws std::invalid_argument naming the offending edge index.
Hypergraph build_hypergraph(int node_count,
                            const std::vector<std::vector<int>>& raw_edges);

/// Per-node and per-edge neighborhood statistics.
/// node_neighbors[v] is sorted and never contains v itself.
struct NeighborhoodIndex {
  std::vector<std::vector<int>> node_neighbors;  // N(v)
  std::vector<int> node_degree;                  // d_v, incidence count
  std::vector<int> edge_size;                    // d_e
  std::vector<int> edge_common_neighbors;        // n_e = |∩_{v∈e} N(v)|

  int neighbor_count(int v) const {
    return static_cast<int>(node_neighbors[v].size());
  }
};

NeighborhoodIndex build_neighborhood_index(const Hypergraph& h);

/// Unit-weight shortest-path distances on the clique expansion
/// (u ~ v iff they co-occur in some hyperedge). BFS rows are computed on
/// demand and cached; the cache is not synchronized, so concurrent callers
/// should each own their oracle (the adjacency may be shared).
class DistanceOracle {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceOracle(std::vector<std::vector<int>> adjacency)
      : adj_(std::move(adjacency)) {}

  int distance(int u, int v) const { return distances_from(u)[v]; }
  const std::vector<int>& distances_from(int source) const;
  int num_nodes() const { return static_cast<int>(adj_.size()); }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  mutable std::unordered_map<int, std::vector<int>> cache_;
};

DistanceOracle clique_expansion(const Hypergraph& h);

}  // namespace hycurv

#endif  // HYCURV_HYPERGRAPH_HPP_
