// Python face of the toolkit. Every entry point takes graph documents as
// JSON text and returns the same JSON documents the CLI prints, so the two
// surfaces cannot drift apart. The python package wraps these in dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "graphvn/classify.hpp"
#include "graphvn/fock.hpp"
#include "graphvn/lattice.hpp"
#include "graphvn/moments.hpp"
#include "graphvn/selftest.hpp"
#include "graphvn/tl.hpp"

namespace py = pybind11;

namespace {

using namespace graphvn;

WeightedGraph parse_valid(const std::string& text) {
  WeightedGraph g = WeightedGraph::from_string(text);
  auto violations = g.validate();
  if (!violations.empty())
    throw ParseError(violations.front().code + ": " + violations.front().message);
  return g;
}

std::optional<std::string> opt_of(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

int resolve_base_checked(const WeightedGraph& g, const std::string& base) {
  auto override_name = opt_of(base);
  if (override_name && g.vertex_index(*override_name) < 0)
    throw ParseError("unknown base vertex: " + base);
  return g.resolve_base(override_name);
}

std::string do_validate(const std::string& text) {
  WeightedGraph g = WeightedGraph::from_string(text);
  auto violations = g.validate();
  json doc;
  doc["schema"] = "graphvn-validate/1";
  doc["valid"] = violations.empty();
  doc["violations"] = json::array();
  for (const auto& v : violations)
    doc["violations"].push_back(
        json{{"code", v.code}, {"message", v.message}, {"where", v.where}});
  return doc.dump();
}

std::string do_classify(const std::string& text, bool normalize,
                        const std::string& base) {
  WeightedGraph g = parse_valid(text);
  ClassifyOptions opts;
  opts.normalize = normalize;
  opts.base_override = opt_of(base);
  if (opts.base_override && g.vertex_index(*opts.base_override) < 0)
    throw ParseError("unknown base vertex: " + base);
  return classify(g, opts).to_json(g).dump();
}

std::string do_cycle_group(const std::string& text) {
  WeightedGraph g = parse_valid(text);
  RationalLattice lat = cycle_group(g);
  json doc;
  doc["schema"] = "graphvn-cycle-group/1";
  json body = lat.to_json();
  doc["rank"] = body["rank"];
  doc["generators"] = body["generators"];
  doc["trivial"] = lat.trivial();
  return doc.dump();
}

std::string do_state(const std::string& text, const std::string& base) {
  WeightedGraph g = parse_valid(text);
  TracialData td = tracial_subgraph(g, resolve_base_checked(g, base));
  json doc;
  doc["schema"] = "graphvn-state/1";
  json body = tracial_data_json(g, td);
  for (auto& [k, v] : body.items()) doc[k] = v;
  json eigen = json::object();
  for (int e = 0; e < g.edge_count(); ++e)
    eigen[g.edge(e).id] = fraction_string(edge_eigenvalue(g, td, e));
  doc["edge_eigenvalues"] = eigen;
  return doc.dump();
}

std::string do_moment(const std::string& text,
                      const std::vector<std::string>& word_ids, int depth,
                      double tol, const std::string& base,
                      std::size_t max_entries) {
  WeightedGraph g = parse_valid(text);
  Word w = word_from_ids(g, word_ids);
  if (w.empty()) throw ParseError("word must name at least one edge");
  TracialData td = tracial_subgraph(g, resolve_base_checked(g, base));
  SurdScalar exact = phi_moment(g, td, w);

  NormalizedWord nw = normalize_word(g, w);
  FockBasis basis = FockBasis::build(g, depth, max_entries);
  int src = g.edge(nw.edges.front()).src;
  double simulated = nw.prefactor.to_double() * to_double(td.state[src]) *
                     vacuum_expectation(g, basis, nw.edges, src);
  double series = exact.to_double();
  double deviation = std::abs(series - simulated);

  json doc;
  doc["schema"] = "graphvn-moment/1";
  doc["word"] = json::array();
  for (const auto& letter : w)
    doc["word"].push_back(g.edge(letter.edge).id + (letter.star ? "*" : ""));
  doc["exact"] = exact.str();
  doc["value"] = series;
  doc["fock"] = json{{"depth", depth},
                     {"simulated", simulated},
                     {"deviation", deviation},
                     {"tol", tol},
                     {"ok", deviation <= tol}};
  return doc.dump();
}

std::string do_eigen_check(const std::string& text, const std::string& edge_id,
                           const std::vector<std::string>& word_ids,
                           const std::string& base) {
  WeightedGraph g = parse_valid(text);
  int e = g.require_edge(edge_id);
  Word w = word_from_ids(g, word_ids);
  TracialData td = tracial_subgraph(g, resolve_base_checked(g, base));
  EigenCheck chk = check_eigen_identity(g, td, e, w);
  json doc;
  doc["schema"] = "graphvn-eigen/1";
  doc["edge"] = edge_id;
  doc["eigenvalue"] = fraction_string(chk.eigenvalue);
  doc["edge_then_word"] = chk.lhs.str();
  doc["word_then_edge"] = chk.rhs.str();
  doc["holds"] = chk.holds;
  return doc.dump();
}

std::string do_tl_check(const std::string& text_a, const std::string& text_b,
                        int max_n) {
  WeightedGraph a = parse_valid(text_a);
  WeightedGraph b = parse_valid(text_b);
  return verify_inclusion(a, b, max_n).to_json().dump();
}

std::string do_selftest() {
  SelfTestReport rep = run_selftest();
  json doc;
  doc["schema"] = "graphvn-selftest/1";
  doc["passed"] = rep.all_passed();
  doc["items"] = json::array();
  for (const auto& item : rep.items)
    doc["items"].push_back(json{{"name", item.name},
                                {"passed", item.passed},
                                {"detail", item.detail}});
  return doc.dump();
}

}  // namespace

PYBIND11_MODULE(_graphvn, m) {
  m.doc() = "weighted-graph operator algebra toolkit (JSON text in and out)";

  py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
  py::register_exception<UnknownEdgeError>(m, "UnknownEdgeError", PyExc_ValueError);

  m.def("validate", &do_validate, py::arg("graph_json"),
        "Structural invariant report for a graph document.");
  m.def("classify", &do_classify, py::arg("graph_json"),
        py::arg("normalize") = false, py::arg("base") = std::string(),
        "Isomorphism-class report: weight group, state, atoms, diffuse part.");
  m.def("cycle_group", &do_cycle_group, py::arg("graph_json"),
        "Canonical basis of the loop-weight subgroup of the positive rationals.");
  m.def("state", &do_state, py::arg("graph_json"),
        py::arg("base") = std::string(),
        "Vertex state from the spanning tree plus every edge eigenvalue.");
  m.def("moment", &do_moment, py::arg("graph_json"), py::arg("word"),
        py::arg("depth") = 6, py::arg("tol") = 1e-9,
        py::arg("base") = std::string(),
        py::arg("max_entries") = kDefaultBasisCap,
        "Exact word moment with a truncated-simulator cross-check.");
  m.def("eigen_check", &do_eigen_check, py::arg("graph_json"), py::arg("edge"),
        py::arg("word"), py::arg("base") = std::string(),
        "Exchange identity for one edge against one word.");
  m.def("tl_check", &do_tl_check, py::arg("graph_json_a"),
        py::arg("graph_json_b"), py::arg("max_n") = 3,
        "Diagram algebra inclusion check between two balanced graphs.");
  m.def("selftest", &do_selftest,
        "Condensed randomized property sweep over every module.");
}
