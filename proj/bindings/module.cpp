#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hycurv/analysis.hpp"
#include "hycurv/curvature.hpp"
#include "hycurv/generators.hpp"
#include "hycurv/hypergraph.hpp"
#include "hycurv/io.hpp"
#include "hycurv/transport.hpp"

namespace py = pybind11;
using namespace hycurv;

namespace {

Method method_from_string(const std::string& name) {
  if (name == "hlrc") return Method::kHlrc;
  if (name == "hfrc") return Method::kHfrc;
  if (name == "horc") return Method::kHorc;
  throw std::invalid_argument("unknown method '" + name + "'");
}

py::tuple curvature_tuple(const CurvatureVector& cv) {
  return py::make_tuple(cv.values, std::vector<int>(cv.skipped.begin(), cv.skipped.end()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "hypergraph curvature toolkit (HLRC, HFRC, HORC)";

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](int n, const std::vector<std::vector<int>>& edges) {
             return build_hypergraph(n, edges);
           }),
           py::arg("num_nodes"), py::arg("edges"))
      .def_readonly("num_nodes", &Hypergraph::num_nodes)
      .def_readonly("edges", &Hypergraph::edges)
      .def_readonly("dedup_warnings", &Hypergraph::dedup_warnings)
      .def_property_readonly("num_edges", &Hypergraph::num_edges)
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(n=" + std::to_string(h.num_nodes) +
               ", m=" + std::to_string(h.num_edges()) + ")";
      });

  m.def("gen_complete", &gen_complete, py::arg("n"), py::arg("k"));
  m.def("gen_hypercycle", &gen_hypercycle, py::arg("k"), py::arg("s"), py::arg("m"));
  m.def("gen_hypergrid", &gen_hypergrid, py::arg("k"));
  m.def(
      "gen_hypertree",
      [](int k, int r, int depth) {
        auto [h, gt] = gen_hypertree(k, r, depth);
        return py::make_tuple(h, gt.edge_terminal, gt.expected_hlrc);
      },
      py::arg("k"), py::arg("r"), py::arg("depth"),
      "returns (hypergraph, terminal flags, closed-form HLRC per edge)");
  m.def(
      "gen_hsbm",
      [](const std::vector<int>& blocks, int k, double a, double b,
         std::uint64_t seed) {
        auto [h, gt] = gen_hsbm(blocks, k, a, b, seed);
        return py::make_tuple(h, gt.node_community, gt.edge_intra);
      },
      py::arg("block_sizes"), py::arg("k"), py::arg("a"), py::arg("b"),
      py::arg("seed"),
      "returns (hypergraph, node communities, per-edge intra flags)");
  m.def("gen_chung_lu", &gen_chung_lu, py::arg("node_degrees"),
        py::arg("edge_sizes"), py::arg("seed"));

  m.def(
      "hlrc",
      [](const Hypergraph& h, int threads) {
        return curvature_tuple(hlrc_all(h, threads));
      },
      py::arg("h"), py::arg("threads") = 1,
      "per-edge HLRC values and skipped edge indices");
  m.def(
      "hfrc",
      [](const Hypergraph& h, int threads) {
        return curvature_tuple(hfrc_all(h, threads));
      },
      py::arg("h"), py::arg("threads") = 1);
  m.def(
      "horc",
      [](const Hypergraph& h, int threads) {
        return curvature_tuple(horc_all(h, threads));
      },
      py::arg("h"), py::arg("threads") = 1);

  m.def(
      "wasserstein1",
      [](const std::vector<double>& mu, const std::vector<double>& nu,
         const std::vector<std::vector<double>>& cost) {
        return wasserstein1({mu, nu, cost});
      },
      py::arg("mu"), py::arg("nu"), py::arg("cost"));

  m.def(
      "curvature_histogram",
      [](const std::vector<double>& values, const std::string& method) {
        return curvature_histogram(values, method_from_string(method)).freq;
      },
      py::arg("values"), py::arg("method"));
  m.def("adjusted_rand_index", &adjusted_rand_index, py::arg("x"), py::arg("y"));
  m.def("adjusted_mutual_info", &adjusted_mutual_info, py::arg("x"), py::arg("y"));
  m.def(
      "wilcoxon_rank_sum",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        const auto r = wilcoxon_rank_sum(a, b);
        return py::make_tuple(r.statistic, r.two_sided_p);
      },
      py::arg("a"), py::arg("b"), "returns (U statistic, two-sided p)");

  m.def(
      "cluster_pipeline",
      [](const std::vector<Hypergraph>& collection, const std::string& method,
         int k, std::uint64_t seed,
         const std::optional<std::vector<int>>& ground_truth) {
        const auto res =
            cluster_pipeline(collection, method_from_string(method), k, seed,
                             ground_truth ? &*ground_truth : nullptr);
        py::dict out;
        out["embedding"] = res.embedding.points;
        out["labels"] = res.labels;
        if (res.scores) {
          out["ari"] = res.scores->ari;
          out["ami"] = res.scores->ami;
        }
        return out;
      },
      py::arg("collection"), py::arg("method"), py::arg("k"), py::arg("seed"),
      py::arg("ground_truth") = py::none());

  m.def(
      "read_hyperedges",
      [](const std::string& path) {
        auto parsed = parse_hyperedges(path);
        return py::make_tuple(parsed.h, parsed.tokens);
      },
      py::arg("path"), "returns (hypergraph, node tokens)");
  m.def(
      "write_hyperedges",
      [](const std::string& path, const Hypergraph& h,
         const std::optional<std::vector<std::string>>& tokens) {
        write_hyperedges(path, h, tokens ? &*tokens : nullptr);
      },
      py::arg("path"), py::arg("h"), py::arg("tokens") = py::none());
}
