#ifndef HYCURV_IO_HPP_
#define HYCURV_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hycurv/curvature.hpp"
#include "hycurv/hypergraph.hpp"

namespace hycurv {

/// Hypergraph plus the external token per dense node id.
struct ParsedHypergraph {
  Hypergraph h;
  std::vector<std::string> tokens;
  int dedup_warnings = 0;
};

/// Hyperedge-list text format: one edge per line, whitespace-separated node
/// tokens, optional trailing `# label`, `%` comment lines. Tokens are mapped
/// to dense ids in first-appearance order.
ParsedHypergraph parse_hyperedges(const std::string& path);
ParsedHypergraph parse_hyperedges_stream(std::istream& in,
                                         const std::string& source_name);

void write_hyperedges(std::ostream& out, const Hypergraph& h,
                      const std::vector<std::string>* tokens = nullptr);
void write_hyperedges(const std::string& path, const Hypergraph& h,
                      const std::vector<std::string>* tokens = nullptr);

/// 12 significant digits, locale independent.
std::string format_number(double v);

struct CurvatureReport {
  struct Row {
    int edge;
    std::vector<std::string> members;
    std::string label;
    std::map<std::string, double> values;  // method name -> value (NaN if skipped)
    bool skipped = false;
  };
  struct Summary {
    double mean, min, max;
    int count;
  };
  std::vector<Row> rows;
  std::map<std::string, Summary> summaries;
};

CurvatureReport make_report(const Hypergraph& h,
                            const std::vector<std::string>& tokens,
                            const std::vector<CurvatureVector>& results);

void write_report_csv(std::ostream& out, const CurvatureReport& report);
void write_report_json(std::ostream& out, const CurvatureReport& report);

struct BenchRecord {
  std::string method;
  std::string vary;        // "m" | "n" | "dbar"
  double vary_value = 0.0;
  int target_m = 0, target_n = 0;
  double target_dbar = 0.0;
  int realized_m = 0, realized_n = 0;
  double realized_dbar = 0.0;
  std::uint64_t seed = 0;
  double index_ms = 0.0;
  double curvature_ms = 0.0;
  bool timed_out = false;
  bool skipped = false;
};

struct BenchConfig {
  std::string vary = "m";
  std::vector<double> values;
  int base_m = 1000;
  int base_n = 500;
  double base_dbar = 4.0;
  std::vector<Method> methods;
  std::vector<std::uint64_t> seeds{1};
  double timeout_ms = 0.0;  // 0 disables the timeout
};

std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Chung-Lu target sequences for a bench cell: uniform edge size dbar, the
/// matching volume spread evenly over n nodes.
std::pair<std::vector<int>, std::vector<int>> bench_targets(int m, int n,
                                                            double dbar);

}  // namespace hycurv

#endif  // HYCURV_IO_HPP_
