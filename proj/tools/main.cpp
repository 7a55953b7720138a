#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hycurv/analysis.hpp"
#include "hycurv/curvature.hpp"
#include "hycurv/generators.hpp"
#include "hycurv/io.hpp"

namespace fs = std::filesystem;
using namespace hycurv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;

int default_threads() {
  if (const char* env = std::getenv("HYCURV_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

Method parse_method(const std::string& name) {
  if (name == "hlrc") return Method::kHlrc;
  if (name == "hfrc") return Method::kHfrc;
  if (name == "horc") return Method::kHorc;
  throw CLI::ValidationError("method", "unknown method '" + name + "'");
}

std::vector<double> read_numbers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  return out;
}

struct GenOptions {
  std::string family;
  int n = 0, k = 0, s = 0, m = 0, r = 0, depth = 0;
  std::vector<int> blocks;
  double a = 0.0, b = 0.0;
  std::vector<int> node_degrees, edge_sizes;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenOptions& opt) {
  Hypergraph h;
  GroundTruth gt;
  bool has_truth = false;
  if (opt.family == "complete") {
    h = gen_complete(opt.n, opt.k);
  } else if (opt.family == "hypercycle") {
    h = gen_hypercycle(opt.k, opt.s, opt.m);
  } else if (opt.family == "hypertree") {
    std::tie(h, gt) = gen_hypertree(opt.k, opt.r, opt.depth);
  } else if (opt.family == "hypergrid") {
    h = gen_hypergrid(opt.k);
  } else if (opt.family == "hsbm") {
    std::tie(h, gt) = gen_hsbm(opt.blocks, opt.k, opt.a, opt.b, opt.seed);
    has_truth = true;
  } else if (opt.family == "chunglu") {
    h = gen_chung_lu(opt.node_degrees, opt.edge_sizes, opt.seed);
  } else {
    throw CLI::ValidationError("family", "unknown family '" + opt.family + "'");
  }

  write_hyperedges(opt.output, h);
  if (has_truth) {
    std::ofstream out(opt.output + ".truth");
    if (!out) throw std::runtime_error("cannot write " + opt.output + ".truth");
    out << "% node community\n";
    for (std::size_t v = 0; v < gt.node_community.size(); ++v) {
      out << v << ' ' << gt.node_community[v] << '\n';
    }
    out << "% edge intra\n";
    for (std::size_t j = 0; j < gt.edge_intra.size(); ++j) {
      out << j << ' ' << (gt.edge_intra[j] ? "intra" : "inter") << '\n';
    }
  }
  return kExitOk;
}

int cmd_compute(const std::string& input, const std::vector<std::string>& methods,
                const std::string& output, const std::string& format,
                int threads) {
  ParsedHypergraph parsed = parse_hyperedges(input);
  if (parsed.dedup_warnings > 0) {
    std::cerr << "warning: dropped " << parsed.dedup_warnings
              << " duplicate node tokens within edges\n";
  }
  std::vector<CurvatureVector> results;
  for (const auto& name : methods) {
    switch (parse_method(name)) {
      case Method::kHlrc: results.push_back(hlrc_all(parsed.h, threads)); break;
      case Method::kHfrc: results.push_back(hfrc_all(parsed.h, threads)); break;
      case Method::kHorc: results.push_back(horc_all(parsed.h, threads)); break;
    }
  }
  const CurvatureReport report = make_report(parsed.h, parsed.tokens, results);
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write " + output);
  if (format == "json") {
    write_report_json(out, report);
  } else {
    write_report_csv(out, report);
  }
  return kExitOk;
}

std::vector<std::pair<std::string, fs::path>> collect_inputs(
    const std::string& inputs) {
  std::vector<std::pair<std::string, fs::path>> files;
  const fs::path p(inputs);
  if (fs::is_directory(p)) {
    for (const auto& entry : fs::directory_iterator(p)) {
      if (entry.is_regular_file()) {
        files.emplace_back(entry.path().stem().string(), entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else {
    std::ifstream in(inputs);
    if (!in) throw std::runtime_error("cannot read " + inputs);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '%') continue;
      fs::path f(line);
      files.emplace_back(f.stem().string(), f);
    }
  }
  if (files.empty()) throw std::runtime_error("no input hypergraphs found");
  return files;
}

int cmd_cluster(const std::string& inputs, const std::string& method_name,
                int k, std::uint64_t seed, const std::string& labels_path,
                const std::string& prefix) {
  const Method method = parse_method(method_name);
  auto files = collect_inputs(inputs);

  std::vector<Hypergraph> collection;
  std::vector<std::string> names;
  for (const auto& [name, path] : files) {
    collection.push_back(parse_hyperedges(path.string()).h);
    names.push_back(name);
  }

  std::vector<int> truth;
  bool has_truth = false;
  if (!labels_path.empty()) {
    std::ifstream in(labels_path);
    if (!in) throw std::runtime_error("cannot read " + labels_path);
    std::map<std::string, std::string> by_name;
    std::string name, label;
    while (in >> name >> label) by_name[name] = label;
    std::map<std::string, int> label_ids;
    for (const auto& n : names) {
      auto it = by_name.find(n);
      if (it == by_name.end()) {
        throw std::runtime_error("no label for hypergraph '" + n + "'");
      }
      truth.push_back(
          label_ids.emplace(it->second, static_cast<int>(label_ids.size()))
              .first->second);
    }
    has_truth = true;
  }

  const PipelineResult res =
      cluster_pipeline(collection, method, k, seed, has_truth ? &truth : nullptr);

  {
    std::ofstream out(prefix + "_embedding.csv");
    if (!out) throw std::runtime_error("cannot write embedding csv");
    out << "name,x,y,cluster\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << names[i] << ',' << format_number(res.embedding.points[i][0]) << ','
          << format_number(res.embedding.points[i][1]) << ',' << res.labels[i]
          << '\n';
    }
  }
  {
    std::ofstream out(prefix + "_histograms.csv");
    if (!out) throw std::runtime_error("cannot write histogram csv");
    out << "name";
    const int bins = histogram_bins(method);
    for (int b = 0; b < bins; ++b) out << ",bin" << b;
    out << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << names[i];
      for (double f : res.histograms[i].freq) out << ',' << format_number(f);
      out << '\n';
    }
  }
  if (res.scores) {
    std::ofstream out(prefix + "_scores.json");
    if (!out) throw std::runtime_error("cannot write scores json");
    nlohmann::json j{{"ari", res.scores->ari}, {"ami", res.scores->ami}};
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_bench(const BenchConfig& cfg, const std::string& output) {
  const auto records = run_bench(cfg);
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write " + output);
  write_bench_csv(out, records);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergraph curvature toolkit"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads for curvature")
      ->check(CLI::PositiveNumber);

  // compute
  auto* compute = app.add_subcommand("compute", "per-edge curvature of a hyperedge list");
  std::string in_path, out_path, format = "csv";
  std::vector<std::string> methods{"hlrc"};
  compute->add_option("--input", in_path, "hyperedge list file")->required();
  compute->add_option("--methods", methods, "hlrc, hfrc, horc")->delimiter(',');
  compute->add_option("--output", out_path, "report file")->required();
  compute->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic hypergraph");
  GenOptions gopt;
  gen->add_option("family", gopt.family,
                  "complete|hypercycle|hypertree|hypergrid|hsbm|chunglu")
      ->required();
  gen->add_option("--n", gopt.n);
  gen->add_option("--k", gopt.k);
  gen->add_option("--s", gopt.s);
  gen->add_option("--m", gopt.m);
  gen->add_option("--r", gopt.r);
  gen->add_option("--depth", gopt.depth);
  gen->add_option("--blocks", gopt.blocks)->delimiter(',');
  gen->add_option("--a", gopt.a);
  gen->add_option("--b", gopt.b);
  gen->add_option("--node-degrees", gopt.node_degrees)->delimiter(',');
  gen->add_option("--edge-sizes", gopt.edge_sizes)->delimiter(',');
  gen->add_option("--seed", gopt.seed);
  gen->add_option("--output", gopt.output)->required();

  // cluster
  auto* cluster = app.add_subcommand("cluster", "curvature-histogram clustering");
  std::string cl_inputs, cl_method = "hlrc", cl_labels, cl_prefix;
  int cl_k = 2;
  std::uint64_t cl_seed = 0;
  cluster->add_option("--inputs", cl_inputs, "directory or manifest file")->required();
  cluster->add_option("--method", cl_method)->check(CLI::IsMember({"hlrc", "horc"}));
  cluster->add_option("--k", cl_k, "number of clusters");
  cluster->add_option("--seed", cl_seed);
  cluster->add_option("--labels", cl_labels, "name-to-group manifest");
  cluster->add_option("--output-prefix", cl_prefix)->required();

  // bench
  auto* bench = app.add_subcommand("bench", "runtime benchmark on Chung-Lu hypergraphs");
  BenchConfig bcfg;
  std::vector<std::string> bench_methods{"hlrc", "hfrc"};
  std::vector<std::uint64_t> bench_seeds{1};
  std::string bench_out;
  bench->add_option("--vary", bcfg.vary)->check(CLI::IsMember({"m", "n", "dbar"}));
  bench->add_option("--values", bcfg.values)->delimiter(',')->required();
  bench->add_option("--m", bcfg.base_m);
  bench->add_option("--n", bcfg.base_n);
  bench->add_option("--dbar", bcfg.base_dbar);
  bench->add_option("--methods", bench_methods)->delimiter(',');
  bench->add_option("--seeds", bench_seeds)->delimiter(',');
  bench->add_option("--timeout-ms", bcfg.timeout_ms);
  bench->add_option("--output", bench_out)->required();

  // stats
  auto* stats = app.add_subcommand("stats", "statistical tests");
  auto* wilcoxon = stats->add_subcommand("wilcoxon", "rank-sum test on two samples");
  std::string wa, wb, wout;
  wilcoxon->add_option("--a", wa, "first sample, one number per line")->required();
  wilcoxon->add_option("--b", wb, "second sample")->required();
  wilcoxon->add_option("--output", wout, "optional JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(in_path, methods, out_path, format, threads);
    }
    if (gen->parsed()) return cmd_gen(gopt);
    if (cluster->parsed()) {
      return cmd_cluster(cl_inputs, cl_method, cl_k, cl_seed, cl_labels, cl_prefix);
    }
    if (bench->parsed()) {
      for (const auto& name : bench_methods) bcfg.methods.push_back(parse_method(name));
      bcfg.seeds = bench_seeds;
      return cmd_bench(bcfg, bench_out);
    }
    if (stats->parsed() && wilcoxon->parsed()) {
      const auto res = wilcoxon_rank_sum(read_numbers(wa), read_numbers(wb));
      nlohmann::json j{{"statistic", res.statistic}, {"p", res.two_sided_p}};
      if (!wout.empty()) {
        std::ofstream out(wout);
        if (!out) throw std::runtime_error("cannot write " + wout);
        out << j.dump(2) << '\n';
      }
      std::cout << j.dump() << '\n';
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    // IO failures (unreadable/unwritable files, parse errors)
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  std::cerr << "no command\n";
  return kExitUsage;
}
