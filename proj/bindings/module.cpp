#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "findex/closed_forms.hpp"
#include "findex/families.hpp"
#include "findex/graph.hpp"
#include "findex/indices.hpp"
#include "findex/transforms.hpp"
#include "findex/verifier.hpp"

namespace py = pybind11;
using namespace findex;

PYBIND11_MODULE(_findex, m) {
  m.doc() = "exact degree-based graph indices, subdivision operations, "
            "hierarchical products, F-sums and closed-form verification";

  py::register_exception<error>(m, "GraphError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("is_connected", &is_connected, py::arg("g"));
  m.def("parse_edge_list",
        [](const std::string& text) { return parse_edge_list(text); }, py::arg("text"));
  m.def("serialize_edge_list",
        [](const Graph& g) { return serialize_edge_list(g); }, py::arg("g"));

  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("star_graph", &star_graph, py::arg("leaves"));
  m.def("complete_bipartite_graph", &complete_bipartite_graph, py::arg("a"), py::arg("b"));
  m.def("nanotube_tuhc6", &nanotube_tuhc6, py::arg("n"));
  m.def("hexagonal_chain", &hexagonal_chain, py::arg("n"));
  m.def("random_connected_graph", &random_connected_graph, py::arg("n"), py::arg("p"),
        py::arg("seed"), py::arg("budget") = 100);

  m.def("first_zagreb", &first_zagreb, py::arg("g"));
  m.def("second_zagreb", &second_zagreb, py::arg("g"));
  m.def("f_index", &f_index, py::arg("g"));
  m.def("f_index_edge_form", &f_index_edge_form, py::arg("g"));
  m.def("general_first_zagreb", &general_first_zagreb, py::arg("g"), py::arg("exponent"));
  m.def("redefined_zagreb", &redefined_zagreb, py::arg("g"));

  py::class_<invariant_bundle_t>(m, "InvariantBundle")
      .def_readonly("n_vertices", &invariant_bundle_t::n_vertices)
      .def_readonly("n_edges", &invariant_bundle_t::n_edges)
      .def_readonly("m1", &invariant_bundle_t::m1)
      .def_readonly("m2", &invariant_bundle_t::m2)
      .def_readonly("f", &invariant_bundle_t::f)
      .def_readonly("xi4", &invariant_bundle_t::xi4)
      .def_readonly("rezm", &invariant_bundle_t::rezm)
      .def_readonly("u_size", &invariant_bundle_t::u_size)
      .def_readonly("sum_deg_u", &invariant_bundle_t::sum_deg_u)
      .def_readonly("sum_deg2_u", &invariant_bundle_t::sum_deg2_u);

  m.def("invariant_bundle",
        [](const Graph& g, py::object u) {
          if (u.is_none())
            return invariant_bundle(g);
          auto subset = u.cast<std::vector<int>>();
          return invariant_bundle(g, subset);
        },
        py::arg("g"), py::arg("u") = py::none());

  py::enum_<subdivision_op>(m, "SubdivisionOp")
      .value("S", subdivision_op::S)
      .value("R", subdivision_op::R)
      .value("Q", subdivision_op::Q)
      .value("T", subdivision_op::T);

  py::class_<transformed_graph>(m, "TransformedGraph")
      .def_readonly("graph", &transformed_graph::graph)
      .def_readonly("original_vertices", &transformed_graph::original_vertices)
      .def_readonly("edge_vertices", &transformed_graph::edge_vertices);

  m.def("line_graph", &line_graph, py::arg("g"));
  m.def("subdivision", &subdivision, py::arg("g"));
  m.def("triangle_parallel", &triangle_parallel, py::arg("g"));
  m.def("line_superposition", &line_superposition, py::arg("g"));
  m.def("total_graph", &total_graph, py::arg("g"));
  m.def("apply_subdivision_op", &apply_subdivision_op, py::arg("g"), py::arg("op"));

  m.def("hierarchical_product",
        [](const Graph& g, const std::vector<int>& u, const Graph& h, bool allow_disconnected) {
          return hierarchical_product(g, u, h, allow_disconnected);
        },
        py::arg("g"), py::arg("u"), py::arg("h"), py::arg("allow_disconnected") = false);
  m.def("f_sum", &f_sum, py::arg("g"), py::arg("h"), py::arg("op"),
        py::arg("allow_disconnected") = false);

  m.def("thm1_f_hierarchical", &thm1_f_hierarchical, py::arg("bg"), py::arg("bh"));
  m.def("prop1_f_transformed", &prop1_f_transformed, py::arg("b"), py::arg("op"));
  m.def("thm_fsum_f", &thm_fsum_f, py::arg("bg"), py::arg("bh"), py::arg("op"));
  m.def("cor1_cycle_s", &cor1_cycle_s, py::arg("n"), py::arg("bh"));

  py::enum_<cor2_variant>(m, "Cor2Variant")
      .value("printed", cor2_variant::printed)
      .value("corrected", cor2_variant::corrected);
  m.def("cor2_path_s", &cor2_path_s, py::arg("n"), py::arg("bh"), py::arg("variant"));
  m.def("example3_path_path", &example3_path_path, py::arg("n"), py::arg("m"), py::arg("op"));

  m.def("oracle_f_of_fsum", &oracle_f_of_fsum, py::arg("g"), py::arg("h"), py::arg("op"),
        py::arg("allow_disconnected") = false);

  py::class_<suite_config>(m, "SuiteConfig")
      .def(py::init<>())
      .def_readwrite("max_order", &suite_config::max_order)
      .def_readwrite("cases_per_formula", &suite_config::cases_per_formula)
      .def_readwrite("seed", &suite_config::seed)
      .def_readwrite("enforce_connected", &suite_config::enforce_connected);

  py::class_<verification_report>(m, "VerificationReport")
      .def_property_readonly("formula",
                             [](const verification_report& r) { return formula_name(r.formula); })
      .def_readonly("instance", &verification_report::instance)
      .def_readonly("seed", &verification_report::seed)
      .def_readonly("expect_mismatch", &verification_report::expect_mismatch)
      .def_readonly("closed_form_value", &verification_report::closed_form_value)
      .def_readonly("oracle_value", &verification_report::oracle_value)
      .def_readonly("aux_failures", &verification_report::aux_failures)
      .def_readonly("passed", &verification_report::passed);

  m.def("run_suite", &run_suite, py::arg("config") = suite_config{});
  m.def("suite_ok", &suite_ok, py::arg("reports"));
  m.def("report_text", [](const std::vector<verification_report>& reports) {
    std::ostringstream out;
    write_text_report(reports, out);
    return out.str();
  });
  m.def("report_jsonl", [](const std::vector<verification_report>& reports) {
    std::ostringstream out;
    write_jsonl_report(reports, out);
    return out.str();
  });
}
