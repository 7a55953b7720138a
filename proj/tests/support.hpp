#ifndef HYCURV_TESTS_SUPPORT_HPP_
#define HYCURV_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hycurv/hypergraph.hpp"

namespace hycurv::testing {

/// Small random hypergraph for property tests: m edges of size 2..max_size
/// drawn uniformly (distinct members).
inline Hypergraph random_hypergraph(int n, int m, int max_size,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(2, max_size);
  std::uniform_int_distribution<int> node_dist(0, n - 1);
  std::vector<std::vector<int>> edges;
  for (int j = 0; j < m; ++j) {
    const int d = std::min(n, size_dist(rng));
    std::set<int> members;
    while (static_cast<int>(members.size()) < d) members.insert(node_dist(rng));
    edges.emplace_back(members.begin(), members.end());
  }
  return build_hypergraph(n, edges);
}

/// Independent recomputation of N(v) as the union of (e \ {v}).
inline std::set<int> brute_force_neighbors(const Hypergraph& h, int v) {
  std::set<int> out;
  for (const auto& e : h.edges) {
    if (std::find(e.begin(), e.end(), v) == e.end()) continue;
    for (int u : e) {
      if (u != v) out.insert(u);
    }
  }
  return out;
}

/// All-pairs distances by Floyd-Warshall on the clique expansion; -1 means
/// unreachable. Only for small instances.
inline std::vector<std::vector<int>> floyd_warshall(const Hypergraph& h) {
  const int n = h.num_nodes;
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : h.edges) {
    for (int u : e) {
      for (int v : e) {
        if (u != v) d[u][v] = 1;
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

}  // namespace hycurv::testing

#endif  // HYCURV_TESTS_SUPPORT_HPP_
