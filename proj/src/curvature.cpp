#include "hycurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hycurv/transport.hpp"

namespace hycurv {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// runs fn(j) over [0, m) partitioned into contiguous per-worker ranges;
// results must be written into pre-sized slots so the output order is
// independent of the worker count
template <typename Fn>
void parallel_edges(int m, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, m));
  if (threads <= 1) {
    for (int j = 0; j < m; ++j) fn(j);
    return;
  }
  std::vector<std::thread> pool;
  const int chunk = (m + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int lo = t * chunk;
    const int hi = std::min(m, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn]() {
      for (int j = lo; j < hi; ++j) fn(j);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::kHlrc: return "hlrc";
    case Method::kHfrc: return "hfrc";
    case Method::kHorc: return "horc";
  }
  return "?";
}

double hlrc_edge(const NeighborhoodIndex& index, const std::vector<int>& edge,
                 int edge_common_neighbors) {
  if (edge.size() < 2) throw std::invalid_argument("hlrc_edge needs d_e >= 2");
  double inv_sum = 0.0;
  int max_nv = 0;
  int min_nv = std::numeric_limits<int>::max();
  for (int v : edge) {
    const int nv = index.neighbor_count(v);
    inv_sum += 1.0 / nv;
    max_nv = std::max(max_nv, nv);
    min_nv = std::min(min_nv, nv);
  }
  const double adj = edge_common_neighbors + edge.size() / 2.0 - 1.0;
  return inv_sum + adj / max_nv + adj / min_nv - 1.0;
}

double hfrc_edge(const NeighborhoodIndex& index, const std::vector<int>& edge) {
  if (edge.size() < 2) throw std::invalid_argument("hfrc_edge needs d_e >= 2");
  long long deg_sum = 0;
  for (int v : edge) deg_sum += index.node_degree[v];
  return 2.0 * static_cast<double>(edge.size()) - static_cast<double>(deg_sum);
}

DiscreteMeasure random_walk_measure(const NeighborhoodIndex& index, int v) {
  const auto& nb = index.node_neighbors[v];
  if (nb.empty()) throw std::invalid_argument("random_walk_measure: isolated node");
  DiscreteMeasure mu;
  mu.support = nb;
  mu.mass.assign(nb.size(), 1.0 / static_cast<double>(nb.size()));
  return mu;
}

std::optional<double> horc_edge(const NeighborhoodIndex& index,
                                const DistanceOracle& dist,
                                const std::vector<int>& edge) {
  const int d = static_cast<int>(edge.size());
  if (d < 2) throw std::invalid_argument("horc_edge needs d_e >= 2");
  std::vector<DiscreteMeasure> mus;
  mus.reserve(d);
  for (int v : edge) mus.push_back(random_walk_measure(index, v));

  double w1_sum = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      TransportProblem p;
      p.mu = mus[i].mass;
      p.nu = mus[j].mass;
      p.cost.resize(p.mu.size());
      for (std::size_t a = 0; a < mus[i].support.size(); ++a) {
        const auto& row = dist.distances_from(mus[i].support[a]);
        auto& crow = p.cost[a];
        crow.resize(p.nu.size());
        for (std::size_t b = 0; b < mus[j].support.size(); ++b) {
          const int dd = row[mus[j].support[b]];
          if (dd == DistanceOracle::kUnreachable) return std::nullopt;
          crow[b] = static_cast<double>(dd);
        }
      }
      w1_sum += wasserstein1(p);
    }
  }
  return 1.0 - 2.0 * w1_sum / (static_cast<double>(d) * (d - 1));
}

CurvatureVector hlrc_values(const Hypergraph& h, const NeighborhoodIndex& index,
                            int threads) {
  const int m = h.num_edges();
  CurvatureVector out{Method::kHlrc, std::vector<double>(m, kNan), {}};
  parallel_edges(m, threads, [&](int j) {
    if (index.edge_size[j] >= 2) {
      out.values[j] =
          hlrc_edge(index, h.edges[j], index.edge_common_neighbors[j]);
    }
  });
  for (int j = 0; j < m; ++j) {
    if (index.edge_size[j] < 2) out.skipped.insert(j);
  }
  return out;
}

CurvatureVector hfrc_values(const Hypergraph& h, const NeighborhoodIndex& index,
                            int threads) {
  const int m = h.num_edges();
  CurvatureVector out{Method::kHfrc, std::vector<double>(m, kNan), {}};
  parallel_edges(m, threads, [&](int j) {
    if (index.edge_size[j] >= 2) out.values[j] = hfrc_edge(index, h.edges[j]);
  });
  for (int j = 0; j < m; ++j) {
    if (index.edge_size[j] < 2) out.skipped.insert(j);
  }
  return out;
}

CurvatureVector horc_values(const Hypergraph& h, const NeighborhoodIndex& index,
                            int threads) {
  const int m = h.num_edges();
  CurvatureVector out{Method::kHorc, std::vector<double>(m, kNan), {}};
  std::mutex skip_mutex;

  threads = std::max(1, std::min(threads, std::max(1, m)));
  std::vector<std::thread> pool;
  const int chunk = (m + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int lo = t * chunk;
    const int hi = std::min(m, lo + chunk);
    if (lo >= hi) break;
    auto work = [&, lo, hi]() {
      // per-worker oracle: the BFS cache is not synchronized
      DistanceOracle dist(index.node_neighbors);
      for (int j = lo; j < hi; ++j) {
        if (index.edge_size[j] < 2) {
          std::lock_guard<std::mutex> lk(skip_mutex);
          out.skipped.insert(j);
          continue;
        }
        auto kappa = horc_edge(index, dist, h.edges[j]);
        if (kappa) {
          out.values[j] = *kappa;
        } else {
          std::lock_guard<std::mutex> lk(skip_mutex);
          out.skipped.insert(j);
        }
      }
    };
    if (threads == 1) {
      work();
    } else {
      pool.emplace_back(work);
    }
  }
  for (auto& th : pool) th.join();
  return out;
}

CurvatureVector hlrc_all(const Hypergraph& h, int threads) {
  return hlrc_values(h, build_neighborhood_index(h), threads);
}

CurvatureVector hfrc_all(const Hypergraph& h, int threads) {
  return hfrc_values(h, build_neighborhood_index(h), threads);
}

CurvatureVector horc_all(const Hypergraph& h, int threads) {
  return horc_values(h, build_neighborhood_index(h), threads);
}

}  // namespace hycurv
