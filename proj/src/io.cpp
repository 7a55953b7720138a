#include "hycurv/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "hycurv/generators.hpp"

namespace hycurv {

ParsedHypergraph parse_hyperedges_stream(std::istream& in,
                                         const std::string& source_name) {
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> tokens;
  std::vector<std::vector<int>> edges;
  std::vector<std::pair<int, std::string>> labels;
  int dedup = 0;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    std::string label;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      label = line.substr(hash + 1);
      const auto first = label.find_first_not_of(" \t");
      label = first == std::string::npos ? "" : label.substr(first);
      const auto last = label.find_last_not_of(" \t\r");
      if (last != std::string::npos) label = label.substr(0, last + 1);
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    std::vector<int> edge;
    std::string tok;
    while (ls >> tok) {
      auto it = ids.find(tok);
      if (it == ids.end()) {
        it = ids.emplace(tok, static_cast<int>(tokens.size())).first;
        tokens.push_back(tok);
      }
      if (std::find(edge.begin(), edge.end(), it->second) != edge.end()) {
        ++dedup;  // duplicate token within a line
      } else {
        edge.push_back(it->second);
      }
    }
    if (edge.empty()) {
      throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                               ": empty hyperedge line");
    }
    if (!label.empty()) labels.emplace_back(static_cast<int>(edges.size()), label);
    edges.push_back(std::move(edge));
  }

  ParsedHypergraph out;
  out.h = build_hypergraph(static_cast<int>(tokens.size()), edges);
  for (auto& [idx, lab] : labels) out.h.edge_labels[idx] = lab;
  for (int v = 0; v < out.h.num_nodes; ++v) out.h.node_labels[v] = tokens[v];
  out.tokens = std::move(tokens);
  out.dedup_warnings = dedup;
  return out;
}

ParsedHypergraph parse_hyperedges(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return parse_hyperedges_stream(in, path);
}

void write_hyperedges(std::ostream& out, const Hypergraph& h,
                      const std::vector<std::string>* tokens) {
  for (int j = 0; j < h.num_edges(); ++j) {
    const auto& e = h.edges[j];
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      if (tokens != nullptr) {
        out << (*tokens)[e[i]];
      } else {
        out << e[i];
      }
    }
    auto it = h.edge_labels.find(j);
    if (it != h.edge_labels.end()) out << " # " << it->second;
    out << '\n';
  }
}

void write_hyperedges(const std::string& path, const Hypergraph& h,
                      const std::vector<std::string>* tokens) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_hyperedges(out, h, tokens);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

CurvatureReport make_report(const Hypergraph& h,
                            const std::vector<std::string>& tokens,
                            const std::vector<CurvatureVector>& results) {
  CurvatureReport rep;
  rep.rows.resize(h.num_edges());
  for (int j = 0; j < h.num_edges(); ++j) {
    auto& row = rep.rows[j];
    row.edge = j;
    for (int v : h.edges[j]) {
      row.members.push_back(v < static_cast<int>(tokens.size())
                                ? tokens[v]
                                : std::to_string(v));
    }
    auto it = h.edge_labels.find(j);
    if (it != h.edge_labels.end()) row.label = it->second;
  }
  for (const auto& cv : results) {
    const std::string name = method_name(cv.method);
    CurvatureReport::Summary s{0.0, 0.0, 0.0, 0};
    for (int j = 0; j < h.num_edges(); ++j) {
      rep.rows[j].values[name] = cv.values[j];
      if (cv.skipped.count(j)) rep.rows[j].skipped = true;
      if (!std::isnan(cv.values[j])) {
        if (s.count == 0) {
          s.min = s.max = cv.values[j];
        } else {
          s.min = std::min(s.min, cv.values[j]);
          s.max = std::max(s.max, cv.values[j]);
        }
        s.mean += cv.values[j];
        ++s.count;
      }
    }
    if (s.count > 0) s.mean /= s.count;
    rep.summaries[name] = s;
  }
  return rep;
}

void write_report_csv(std::ostream& out, const CurvatureReport& report) {
  out << "edge,label,hlrc,hfrc,horc,skipped\n";
  for (const auto& row : report.rows) {
    out << row.edge << ',' << row.label << ',';
    for (const char* name : {"hlrc", "hfrc", "horc"}) {
      auto it = row.values.find(name);
      if (it != row.values.end() && !std::isnan(it->second)) {
        out << format_number(it->second);
      }
      out << ',';
    }
    out << (row.skipped ? 1 : 0) << '\n';
  }
}

void write_report_json(std::ostream& out, const CurvatureReport& report) {
  nlohmann::json j;
  j["edges"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r;
    r["edge"] = row.edge;
    r["members"] = row.members;
    if (!row.label.empty()) r["label"] = row.label;
    for (const auto& [name, v] : row.values) {
      if (!std::isnan(v)) r[name] = v;
    }
    r["skipped"] = row.skipped;
    j["edges"].push_back(std::move(r));
  }
  for (const auto& [name, s] : report.summaries) {
    if (s.count > 0) {
      j["summary"][name] = {{"mean", s.mean},
                            {"min", s.min},
                            {"max", s.max},
                            {"count", s.count}};
    } else {
      j["summary"][name] = {{"count", 0}};
    }
  }
  out << j.dump(2) << '\n';
}

std::pair<std::vector<int>, std::vector<int>> bench_targets(int m, int n,
                                                            double dbar) {
  const int size = std::max(2, static_cast<int>(std::lround(dbar)));
  std::vector<int> edge_sizes(m, size);
  const long long volume = static_cast<long long>(m) * size;
  std::vector<int> node_degrees(n, static_cast<int>(volume / n));
  const int extra = static_cast<int>(volume % n);
  for (int i = 0; i < extra; ++i) ++node_degrees[i];
  return {std::move(node_degrees), std::move(edge_sizes)};
}

namespace {

struct TimedRun {
  double index_ms = 0.0;
  double curvature_ms = 0.0;
  bool timed_out = false;
};

// Runs index construction (timed separately) and the curvature evaluation.
// When a timeout is set the evaluation runs in a worker thread; on expiry it
// is detached and the cell marked timed out.
TimedRun timed_curvature(const std::shared_ptr<const Hypergraph>& h,
                         Method method, double timeout_ms) {
  using clock = std::chrono::steady_clock;
  TimedRun out;

  auto t0 = clock::now();
  auto index = std::make_shared<NeighborhoodIndex>(build_neighborhood_index(*h));
  out.index_ms =
      std::chrono::duration<double, std::milli>(clock::now() - t0).count();

  auto evaluate = [h, index, method]() {
    switch (method) {
      case Method::kHlrc: hlrc_values(*h, *index); break;
      case Method::kHfrc: hfrc_values(*h, *index); break;
      case Method::kHorc: horc_values(*h, *index); break;
    }
  };

  if (timeout_ms <= 0.0) {
    t0 = clock::now();
    evaluate();
    out.curvature_ms =
        std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return out;
  }

  struct Shared {
    std::mutex mu;
    std::condition_variable cv;
    bool done = false;
    double elapsed_ms = 0.0;
  };
  auto state = std::make_shared<Shared>();
  std::thread worker([state, evaluate]() {
    auto start = clock::now();
    evaluate();
    std::lock_guard<std::mutex> lk(state->mu);
    state->elapsed_ms =
        std::chrono::duration<double, std::milli>(clock::now() - start).count();
    state->done = true;
    state->cv.notify_all();
  });
  std::unique_lock<std::mutex> lk(state->mu);
  const bool finished =
      state->cv.wait_for(lk, std::chrono::duration<double, std::milli>(timeout_ms),
                         [&]() { return state->done; });
  if (finished) {
    worker.join();
    out.curvature_ms = state->elapsed_ms;
  } else {
    worker.detach();  // the stray worker finishes on its own
    out.curvature_ms = timeout_ms;
    out.timed_out = true;
  }
  return out;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRecord> records;
  for (double value : cfg.values) {
    int m = cfg.base_m, n = cfg.base_n;
    double dbar = cfg.base_dbar;
    if (cfg.vary == "m") {
      m = static_cast<int>(value);
    } else if (cfg.vary == "n") {
      n = static_cast<int>(value);
    } else if (cfg.vary == "dbar") {
      dbar = value;
    } else {
      throw std::invalid_argument("vary must be one of m, n, dbar");
    }
    for (std::uint64_t seed : cfg.seeds) {
      std::shared_ptr<const Hypergraph> h;
      BenchRecord base;
      base.vary = cfg.vary;
      base.vary_value = value;
      base.target_m = m;
      base.target_n = n;
      base.target_dbar = dbar;
      base.seed = seed;
      try {
        auto [degrees, sizes] = bench_targets(m, n, dbar);
        h = std::make_shared<const Hypergraph>(gen_chung_lu(degrees, sizes, seed));
      } catch (const std::invalid_argument&) {
        for (Method method : cfg.methods) {
          BenchRecord rec = base;
          rec.method = method_name(method);
          rec.skipped = true;
          records.push_back(rec);
        }
        continue;
      }
      // re-measure the realized instance next to the targets
      long long pins = 0;
      for (const auto& e : h->edges) pins += static_cast<long long>(e.size());
      base.realized_m = h->num_edges();
      base.realized_n = h->num_nodes;
      base.realized_dbar =
          h->num_edges() ? static_cast<double>(pins) / h->num_edges() : 0.0;

      for (Method method : cfg.methods) {
        BenchRecord rec = base;
        rec.method = method_name(method);
        const TimedRun run = timed_curvature(h, method, cfg.timeout_ms);
        rec.index_ms = run.index_ms;
        rec.curvature_ms = run.curvature_ms;
        rec.timed_out = run.timed_out;
        records.push_back(rec);
      }
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "method,vary,value,target_m,target_n,target_dbar,realized_m,"
         "realized_n,realized_dbar,seed,index_ms,curvature_ms,timed_out,"
         "skipped\n";
  for (const auto& r : records) {
    out << r.method << ',' << r.vary << ',' << format_number(r.vary_value) << ','
        << r.target_m << ',' << r.target_n << ',' << format_number(r.target_dbar)
        << ',' << r.realized_m << ',' << r.realized_n << ','
        << format_number(r.realized_dbar) << ',' << r.seed << ','
        << format_number(r.index_ms) << ',' << format_number(r.curvature_ms)
        << ',' << (r.timed_out ? 1 : 0) << ',' << (r.skipped ? 1 : 0) << '\n';
  }
}

}  // namespace hycurv
