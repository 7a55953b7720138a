#include "hycurv/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace hycurv {

Hypergraph build_hypergraph(int node_count,
                            const std::vector<std::vector<int>>& raw_edges) {
  if (node_count < 0) {
    throw std::invalid_argument("node count must be nonnegative");
  }
  Hypergraph h;
  h.num_nodes = node_count;
  h.edges.reserve(raw_edges.size());
  for (std::size_t j = 0; j < raw_edges.size(); ++j) {
    if (raw_edges[j].empty()) {
      throw std::invalid_argument("edge " + std::to_string(j) + " is empty");
    }
    std::vector<int> e = raw_edges[j];
    for (int v : e) {
      if (v < 0 || v >= node_count) {
        throw std::invalid_argument("node id " + std::to_string(v) +
                                    " out of range in edge " +
                                    std::to_string(j));
      }
    }
    std::sort(e.begin(), e.end());
    auto last = std::unique(e.begin(), e.end());
    h.dedup_warnings += static_cast<int>(e.end() - last);
    e.erase(last, e.end());
    h.edges.push_back(std::move(e));
  }
  return h;
}

NeighborhoodIndex build_neighborhood_index(const Hypergraph& h) {
  NeighborhoodIndex idx;
  const int n = h.num_nodes;
  const int m = h.num_edges();
  idx.node_neighbors.assign(n, {});
  idx.node_degree.assign(n, 0);
  idx.edge_size.resize(m);
  idx.edge_common_neighbors.assign(m, 0);

  for (int j = 0; j < m; ++j) {
    const auto& e = h.edges[j];
    idx.edge_size[j] = static_cast<int>(e.size());
    for (int v : e) {
      ++idx.node_degree[v];
      for (int u : e) {
        if (u != v) idx.node_neighbors[v].push_back(u);
      }
    }
  }
  for (auto& nb : idx.node_neighbors) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  // n_e via repeated sorted-merge intersection of the members' neighbor lists
  std::vector<int> common, next;
  for (int j = 0; j < m; ++j) {
    const auto& e = h.edges[j];
    common = idx.node_neighbors[e[0]];
    for (std::size_t i = 1; i + 0 < e.size() && !common.empty(); ++i) {
      next.clear();
      std::set_intersection(common.begin(), common.end(),
                            idx.node_neighbors[e[i]].begin(),
                            idx.node_neighbors[e[i]].end(),
                            std::back_inserter(next));
      common.swap(next);
    }
    idx.edge_common_neighbors[j] = static_cast<int>(common.size());
  }
  return idx;
}

const std::vector<int>& DistanceOracle::distances_from(int source) const {
  auto it = cache_.find(source);
  if (it != cache_.end()) return it->second;
  std::vector<int> dist(adj_.size(), kUnreachable);
  dist[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj_[u]) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return cache_.emplace(source, std::move(dist)).first->second;
}

DistanceOracle clique_expansion(const Hypergraph& h) {
  NeighborhoodIndex idx = build_neighborhood_index(h);
  return DistanceOracle(std::move(idx.node_neighbors));
}

}  // namespace hycurv
