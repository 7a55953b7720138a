#include "hycurv/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hycurv {
namespace {

constexpr double kMassTol = 1e-12;
constexpr double kEps = 1e-13;

void validate(const TransportProblem& p) {
  double su = 0.0, sv = 0.0;
  for (double x : p.mu) {
    if (x < 0.0) throw std::invalid_argument("negative mass");
    su += x;
  }
  for (double x : p.nu) {
    if (x < 0.0) throw std::invalid_argument("negative mass");
    sv += x;
  }
  if (std::abs(su - 1.0) > kMassTol || std::abs(sv - 1.0) > kMassTol) {
    throw std::invalid_argument("measure masses must sum to 1");
  }
  if (p.cost.size() != p.mu.size()) {
    throw std::invalid_argument("cost rows must match |mu|");
  }
  for (const auto& row : p.cost) {
    if (row.size() != p.nu.size()) {
      throw std::invalid_argument("cost columns must match |nu|");
    }
    for (double c : row) {
      if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument("costs must be finite and nonnegative");
      }
    }
  }
}

}  // namespace

TransportPlan wasserstein1_plan(const TransportProblem& p) {
  validate(p);
  const int ns = static_cast<int>(p.mu.size());
  const int nt = static_cast<int>(p.nu.size());
  std::vector<double> surplus = p.mu;
  std::vector<double> deficit = p.nu;
  for (double& x : surplus) {
    if (x < 1e-15) x = 0.0;
  }
  for (double& x : deficit) {
    if (x < 1e-15) x = 0.0;
  }

  TransportPlan plan;
  plan.flow.assign(ns, std::vector<double>(nt, 0.0));

  // successive shortest augmenting paths with potentials; node v in [0, ns)
  // is a source, v in [ns, ns+nt) a sink
  const int total = ns + nt;
  std::vector<double> pot(total, 0.0), dist(total);
  std::vector<int> parent(total);
  std::vector<char> done(total);

  auto remaining = [&]() {
    double r = 0.0;
    for (double x : surplus) r += x;
    return r;
  };

  while (remaining() > kMassTol) {
    const double inf = std::numeric_limits<double>::infinity();
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(done.begin(), done.end(), 0);
    for (int i = 0; i < ns; ++i) {
      if (surplus[i] > kEps) dist[i] = 0.0;
    }
    for (int iter = 0; iter < total; ++iter) {
      int u = -1;
      for (int v = 0; v < total; ++v) {
        if (!done[v] && dist[v] < inf && (u == -1 || dist[v] < dist[u])) u = v;
      }
      if (u == -1) break;
      done[u] = 1;
      if (u < ns) {
        for (int j = 0; j < nt; ++j) {
          const double w = dist[u] + p.cost[u][j] + pot[u] - pot[ns + j];
          if (w < dist[ns + j] - kEps) {
            dist[ns + j] = w;
            parent[ns + j] = u;
          }
        }
      } else {
        const int j = u - ns;
        for (int i = 0; i < ns; ++i) {
          if (plan.flow[i][j] <= kEps) continue;
          const double w = dist[u] - p.cost[i][j] + pot[u] - pot[i];
          if (w < dist[i] - kEps) {
            dist[i] = w;
            parent[i] = u;
          }
        }
      }
    }

    int target = -1;
    for (int j = 0; j < nt; ++j) {
      if (deficit[j] > kEps && dist[ns + j] < inf &&
          (target == -1 || dist[ns + j] < dist[target])) {
        target = ns + j;
      }
    }
    if (target == -1) {
      if (remaining() < 1e-9) break;  // rounding dust on the marginals
      throw std::runtime_error("transport network infeasible");
    }

    // bottleneck along the augmenting path
    double amount = deficit[target - ns];
    int v = target;
    while (parent[v] != -1) {
      const int u = parent[v];
      if (u >= ns) amount = std::min(amount, plan.flow[v][u - ns]);
      v = u;
    }
    amount = std::min(amount, surplus[v]);

    v = target;
    while (parent[v] != -1) {
      const int u = parent[v];
      if (u < ns) {
        plan.flow[u][v - ns] += amount;
      } else {
        plan.flow[v][u - ns] -= amount;
      }
      v = u;
    }
    surplus[v] -= amount;
    deficit[target - ns] -= amount;

    for (int w = 0; w < total; ++w) {
      if (dist[w] < inf) pot[w] += dist[w];
    }
  }

  plan.value = 0.0;
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) plan.value += plan.flow[i][j] * p.cost[i][j];
  }
  return plan;
}

double wasserstein1(const TransportProblem& p) { return wasserstein1_plan(p).value; }

namespace {

// minimal two-phase dense simplex with Bland's rule, minimizing c'x subject
// to Ax = b, x >= 0; returns optimal objective
double simplex_solve(std::vector<std::vector<double>> a, std::vector<double> b,
                     std::vector<double> c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0.0) {
      for (double& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }
  // tableau with artificial variables appended
  const int cols = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = b[i];
    basis[i] = n + i;
  }
  auto pivot = [&](int leave, int enter) {
    const double piv = t[leave][enter];
    for (double& x : t[leave]) x /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  };

  // entering candidates restricted to the first `limit` columns so phase 2
  // cannot bring an artificial variable back
  auto run = [&](const std::vector<double>& obj, int limit) {
    // build reduced-cost row for current basis
    auto& z = t[m];
    std::fill(z.begin(), z.end(), 0.0);
    for (int j = 0; j < cols - 1; ++j) z[j] = j < static_cast<int>(obj.size()) ? obj[j] : 0.0;
    for (int i = 0; i < m; ++i) {
      const double cb = basis[i] < static_cast<int>(obj.size()) ? obj[basis[i]] : 0.0;
      if (cb == 0.0) continue;
      for (int j = 0; j < cols; ++j) z[j] -= cb * t[i][j];
    }
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (z[j] < -1e-9) {
          enter = j;
          break;  // Bland
        }
      }
      if (enter == -1) return;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] > 1e-9) {
          const double ratio = t[i][cols - 1] / t[i][enter];
          if (leave == -1 || ratio < best - 1e-12 ||
              (ratio < best + 1e-12 && basis[i] < basis[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave == -1) throw std::runtime_error("simplex: unbounded");
      pivot(leave, enter);
    }
  };

  std::vector<double> phase1(n + m, 0.0);
  for (int i = 0; i < m; ++i) phase1[n + i] = 1.0;
  run(phase1, cols - 1);
  double infeas = 0.0;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n) infeas += t[i][cols - 1];
  }
  if (infeas > 1e-7) throw std::runtime_error("simplex: infeasible");
  // drive any zero-level artificials out of the basis before phase 2
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(t[i][j]) > 1e-9) {
        enter = j;
        break;
      }
    }
    if (enter != -1) pivot(i, enter);  // else the row is redundant
  }
  run(c, n);
  double obj = 0.0;
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) obj += c[basis[i]] * t[i][cols - 1];
  }
  return obj;
}

}  // namespace

double w1_oracle_small(const TransportProblem& p) {
  validate(p);
  const int ns = static_cast<int>(p.mu.size());
  const int nt = static_cast<int>(p.nu.size());
  if (ns > 6 || nt > 6) {
    throw std::invalid_argument("w1_oracle_small supports at most 6x6");
  }
  const int nvar = ns * nt;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (int i = 0; i < ns; ++i) {
    std::vector<double> row(nvar, 0.0);
    for (int j = 0; j < nt; ++j) row[i * nt + j] = 1.0;
    a.push_back(std::move(row));
    b.push_back(p.mu[i]);
  }
  for (int j = 0; j < nt - 1; ++j) {  // last column constraint is redundant
    std::vector<double> row(nvar, 0.0);
    for (int i = 0; i < ns; ++i) row[i * nt + j] = 1.0;
    a.push_back(std::move(row));
    b.push_back(p.nu[j]);
  }
  std::vector<double> c(nvar);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) c[i * nt + j] = p.cost[i][j];
  }
  return simplex_solve(std::move(a), std::move(b), std::move(c));
}

}  // namespace hycurv
