#include "hycurv/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace hycurv {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// one independent stream per (seed, counter) so generation order is irrelevant
double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t x = splitmix64(seed ^ splitmix64(counter));
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Hypergraph gen_complete(int n, int k) {
  if (k < 2 || k > n) {
    throw std::invalid_argument("gen_complete requires 2 <= k <= n");
  }
  std::vector<std::vector<int>> edges;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  do {
    edges.push_back(c);
  } while (next_combination(c, n));
  return build_hypergraph(n, edges);
}

Hypergraph gen_hypercycle(int k, int s, int m) {
  if (s < 1 || s >= k || m < 2 || m * (k - s) < k) {
    throw std::invalid_argument(
        "gen_hypercycle requires 1 <= s < k, m >= 2, m(k-s) >= k");
  }
  const int n = m * (k - s);
  std::vector<std::vector<int>> edges(m);
  for (int j = 0; j < m; ++j) {
    edges[j].resize(k);
    for (int i = 0; i < k; ++i) edges[j][i] = (j * (k - s) + i) % n;
  }
  return build_hypergraph(n, edges);
}

std::pair<Hypergraph, GroundTruth> gen_hypertree(int k, int r, int depth) {
  if (k < 2 || r < 2 || depth < 1) {
    throw std::invalid_argument("gen_hypertree requires k >= 2, r >= 2, depth >= 1");
  }
  std::vector<std::vector<int>> edges;
  std::vector<int> edge_depth;
  std::vector<int> degree;

  auto fresh = [&degree]() {
    degree.push_back(0);
    return static_cast<int>(degree.size()) - 1;
  };

  std::vector<int> root(k);
  for (int i = 0; i < k; ++i) root[i] = fresh();
  for (int v : root) ++degree[v];
  edges.push_back(root);
  edge_depth.push_back(1);

  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (edge_depth[j] >= depth) continue;
    // snapshot: child edges spawned below must not themselves spawn here
    std::vector<int> members = edges[j];
    for (int v : members) {
      while (degree[v] < r) {
        std::vector<int> child{v};
        for (int i = 1; i < k; ++i) child.push_back(fresh());
        for (int u : child) ++degree[u];
        edges.push_back(child);
        edge_depth.push_back(edge_depth[j] + 1);
      }
    }
  }

  Hypergraph h = build_hypergraph(static_cast<int>(degree.size()), edges);
  GroundTruth gt;
  gt.edge_terminal.resize(edges.size());
  gt.expected_hlrc.resize(edges.size());
  const double non_terminal = 2.0 / r - 1.0;
  const double terminal =
      static_cast<double>((r + 1) * k - 2 * r) / (2.0 * r * (k - 1));
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const bool term = edge_depth[j] == depth;
    gt.edge_terminal[j] = term;
    // a depth-1 tree is a single free-standing edge with HLRC 1
    gt.expected_hlrc[j] = depth == 1 ? 1.0 : (term ? terminal : non_terminal);
  }
  return {std::move(h), std::move(gt)};
}

Hypergraph gen_hypergrid(int k) {
  if (k < 2) throw std::invalid_argument("gen_hypergrid requires k >= 2");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < k; ++i) {
    std::vector<int> row(k);
    for (int j = 0; j < k; ++j) row[j] = i * k + j;
    edges.push_back(std::move(row));
  }
  for (int j = 0; j < k; ++j) {
    std::vector<int> col(k);
    for (int i = 0; i < k; ++i) col[i] = i * k + j;
    edges.push_back(std::move(col));
  }
  return build_hypergraph(k * k, edges);
}

std::pair<Hypergraph, GroundTruth> gen_hsbm(const std::vector<int>& block_sizes,
                                            int k, double a, double b,
                                            std::uint64_t seed) {
  int n = 0;
  for (int sz : block_sizes) {
    if (sz < 0) throw std::invalid_argument("negative block size");
    n += sz;
  }
  if (k < 2 || n < k) throw std::invalid_argument("gen_hsbm requires sum(blocks) >= k >= 2");
  if (a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0) {
    throw std::invalid_argument("gen_hsbm probabilities must lie in [0, 1]");
  }

  GroundTruth gt;
  gt.node_community.reserve(n);
  for (std::size_t blk = 0; blk < block_sizes.size(); ++blk) {
    for (int i = 0; i < block_sizes[blk]; ++i) {
      gt.node_community.push_back(static_cast<int>(blk));
    }
  }

  std::vector<std::vector<int>> edges;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  std::uint64_t counter = 0;
  do {
    bool intra = true;
    for (int i = 1; i < k; ++i) {
      if (gt.node_community[c[i]] != gt.node_community[c[0]]) {
        intra = false;
        break;
      }
    }
    const double p = intra ? a : b;
    if (p > 0.0 && counter_uniform(seed, counter) < p) {
      edges.push_back(c);
      gt.edge_intra.push_back(intra);
    }
    ++counter;
  } while (next_combination(c, n));

  return {build_hypergraph(n, edges), std::move(gt)};
}

Hypergraph gen_chung_lu(const std::vector<int>& node_degrees,
                        const std::vector<int>& edge_sizes,
                        std::uint64_t seed) {
  const int n = static_cast<int>(node_degrees.size());
  long long vol_v = 0, vol_e = 0;
  for (int d : node_degrees) vol_v += d;
  for (int d : edge_sizes) vol_e += d;
  if (vol_v != vol_e) {
    throw std::invalid_argument("gen_chung_lu requires equal degree and size volumes");
  }
  for (int d : edge_sizes) {
    if (d < 2) throw std::invalid_argument("gen_chung_lu edge sizes must be >= 2");
    if (d > n) throw std::invalid_argument("gen_chung_lu edge size exceeds node count");
  }

  std::vector<long long> residual(node_degrees.begin(), node_degrees.end());
  std::vector<std::vector<int>> edges(edge_sizes.size());
  std::vector<char> chosen(n, 0);

  for (std::size_t j = 0; j < edge_sizes.size(); ++j) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(j)));
    auto& e = edges[j];
    for (int picked = 0; picked < edge_sizes[j]; ++picked) {
      long long total = 0;
      for (int v = 0; v < n; ++v) {
        if (!chosen[v]) total += residual[v];
      }
      int v = -1;
      if (total > 0) {
        std::uniform_int_distribution<long long> dist(0, total - 1);
        long long t = dist(rng);
        for (int u = 0; u < n; ++u) {
          if (chosen[u]) continue;
          t -= residual[u];
          if (t < 0) {
            v = u;
            break;
          }
        }
      } else {
        // residuals exhausted: fall back to uniform over remaining nodes
        std::uniform_int_distribution<int> dist(0, n - 1 - picked);
        int t = dist(rng);
        for (int u = 0; u < n; ++u) {
          if (chosen[u]) continue;
          if (t-- == 0) {
            v = u;
            break;
          }
        }
      }
      chosen[v] = 1;
      e.push_back(v);
    }
    for (int v : e) {
      chosen[v] = 0;
      if (residual[v] > 0) --residual[v];
    }
  }
  return build_hypergraph(n, edges);
}

std::optional<double> closed_form_hlrc(Family family, const FamilyParams& params,
                                       EdgeRole role) {
  switch (family) {
    case Family::kComplete:
      return 1.0;
    case Family::kHypergrid:
      return 0.0;
    case Family::kHypertree: {
      const int k = params.k, r = params.r;
      if (k < 2 || r < 2) throw std::invalid_argument("invalid hypertree params");
      if (params.depth == 1) return 1.0;
      if (role == EdgeRole::kTerminal) {
        return static_cast<double>((r + 1) * k - 2 * r) / (2.0 * r * (k - 1));
      }
      if (role == EdgeRole::kNonTerminal) return 2.0 / r - 1.0;
      throw std::invalid_argument("hypertree closed form needs an edge role");
    }
    case Family::kHypercycle: {
      const int k = params.k, s = params.s, m = params.m;
      if (s < 1 || s >= k || m < 2 || m * (k - s) < k) {
        throw std::invalid_argument("invalid hypercycle params");
      }
      if (k > 2 * s && m == 2) {
        return (k / 2.0 - 2 * s) / (k - 1) +
               (k / 2.0 + 2 * s - 1) / (2 * k - 2 * s - 1);
      }
      if (k > 2 * s && m >= 3) {
        return (k / 2.0 - 2 * s) / (k - 1) +
               (k / 2.0 + 2 * s - 1) / (2 * k - s - 1);
      }
      if (k == 2 * s && m == 3) return 1.0;
      if (k == 2 * s && m >= 4) {
        return static_cast<double>(s - 1) / (3 * s - 1);
      }
      if (k == s + 1) return m < 2 * k ? 1.0 : 0.0;
      return std::nullopt;  // intermediate regimes
    }
    default:
      throw std::invalid_argument("no closed form for this family");
  }
}

}  // namespace hycurv
