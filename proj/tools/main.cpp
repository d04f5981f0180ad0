#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphvn/classify.hpp"
#include "graphvn/fock.hpp"
#include "graphvn/lattice.hpp"
#include "graphvn/moments.hpp"
#include "graphvn/selftest.hpp"
#include "graphvn/tl.hpp"

namespace {

using namespace graphvn;

// Exit codes: 0 success, 1 invalid input, 2 computation error.
constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kComputation = 2;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::size_t basis_cap() {
  const char* s = std::getenv("GRAPHVN_MAX_BASIS");
  if (!s) return kDefaultBasisCap;
  try {
    long long v = std::stoll(s);
    if (v <= 0) throw std::invalid_argument("non-positive");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError("GRAPHVN_MAX_BASIS must be a positive integer");
  }
}

std::vector<std::string> split_ids(const std::string& spec) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::optional<std::string> opt_of(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

int cmd_validate(const std::string& path) {
  WeightedGraph g = WeightedGraph::from_file(path);
  auto violations = g.validate();
  json doc;
  doc["schema"] = "graphvn-validate/1";
  doc["valid"] = violations.empty();
  doc["violations"] = json::array();
  for (const auto& v : violations)
    doc["violations"].push_back(
        json{{"code", v.code}, {"message", v.message}, {"where", v.where}});
  emit(doc);
  return violations.empty() ? kOk : kBadInput;
}

WeightedGraph load_valid(const std::string& path) {
  WeightedGraph g = WeightedGraph::from_file(path);
  auto violations = g.validate();
  if (!violations.empty())
    throw ParseError(path + ": " + violations.front().code + ": " +
                     violations.front().message);
  return g;
}

int cmd_classify(const std::string& path, bool normalize, const std::string& base) {
  WeightedGraph g = load_valid(path);
  ClassifyOptions opts;
  opts.normalize = normalize;
  opts.base_override = opt_of(base);
  if (opts.base_override && g.vertex_index(*opts.base_override) < 0)
    throw ParseError("unknown base vertex: " + base);
  IsoClassReport rep = classify(g, opts);
  emit(rep.to_json(g));
  return kOk;
}

int cmd_cycle_group(const std::string& path) {
  WeightedGraph g = load_valid(path);
  json doc;
  doc["schema"] = "graphvn-cycle-group/1";
  RationalLattice lat = cycle_group(g);
  json body = lat.to_json();
  doc["rank"] = body["rank"];
  doc["generators"] = body["generators"];
  doc["trivial"] = lat.trivial();
  emit(doc);
  return kOk;
}

int cmd_state(const std::string& path, const std::string& base) {
  WeightedGraph g = load_valid(path);
  auto override_name = opt_of(base);
  if (override_name && g.vertex_index(*override_name) < 0)
    throw ParseError("unknown base vertex: " + base);
  TracialData td = tracial_subgraph(g, g.resolve_base(override_name));
  json doc;
  doc["schema"] = "graphvn-state/1";
  json body = tracial_data_json(g, td);
  for (auto& [k, v] : body.items()) doc[k] = v;
  json eigen = json::object();
  for (int e = 0; e < g.edge_count(); ++e)
    eigen[g.edge(e).id] = fraction_string(edge_eigenvalue(g, td, e));
  doc["edge_eigenvalues"] = eigen;
  emit(doc);
  return kOk;
}

void dump_basis(const WeightedGraph& g, const FockBasis& basis,
                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open basis dump file: " + path);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& el = basis.element(i);
    out << i << '\t';
    if (el.edges.empty()) {
      out << g.vertex_name(el.vertex);
    } else {
      for (std::size_t k = 0; k < el.edges.size(); ++k) {
        if (k) out << ',';
        out << g.edge(el.edges[k]).id;
      }
    }
    out << '\n';
  }
}

int cmd_moment(const std::string& path, const std::string& word_spec, int depth,
               double tol, const std::string& base,
               const std::string& dump_path) {
  WeightedGraph g = load_valid(path);
  auto override_name = opt_of(base);
  if (override_name && g.vertex_index(*override_name) < 0)
    throw ParseError("unknown base vertex: " + base);
  Word w = word_from_ids(g, split_ids(word_spec));
  if (w.empty()) throw ParseError("--word must name at least one edge");
  TracialData td = tracial_subgraph(g, g.resolve_base(override_name));
  SurdScalar exact = phi_moment(g, td, w);

  // The simulator works on star-free words: pull the star prefactor out.
  NormalizedWord nw = normalize_word(g, w);
  FockBasis basis = FockBasis::build(g, depth, basis_cap());
  if (!dump_path.empty()) dump_basis(g, basis, dump_path);
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
  emit(doc);
  return deviation <= tol ? kOk : kComputation;
}

int cmd_eigen_check(const std::string& path, const std::string& edge_id,
                    const std::string& word_spec, const std::string& base) {
  WeightedGraph g = load_valid(path);
  auto override_name = opt_of(base);
  if (override_name && g.vertex_index(*override_name) < 0)
    throw ParseError("unknown base vertex: " + base);
  int e = g.require_edge(edge_id);
  Word w = word_from_ids(g, split_ids(word_spec));
  TracialData td = tracial_subgraph(g, g.resolve_base(override_name));
  EigenCheck chk = check_eigen_identity(g, td, e, w);
  json doc;
  doc["schema"] = "graphvn-eigen/1";
  doc["edge"] = edge_id;
  doc["eigenvalue"] = fraction_string(chk.eigenvalue);
  doc["edge_then_word"] = chk.lhs.str();
  doc["word_then_edge"] = chk.rhs.str();
  doc["holds"] = chk.holds;
  emit(doc);
  return chk.holds ? kOk : kComputation;
}

int cmd_tl_check(const std::string& path_a, const std::string& path_b, int max_n) {
  WeightedGraph a = load_valid(path_a);
  WeightedGraph b = load_valid(path_b);
  InclusionReport rep = verify_inclusion(a, b, max_n);
  emit(rep.to_json());
  return rep.ok ? kOk : kComputation;
}

int cmd_selftest() {
  SelfTestReport rep = run_selftest();
  for (const auto& item : rep.items) {
    std::cerr << (item.passed ? "[pass] " : "[FAIL] ") << item.name;
    if (!item.detail.empty()) std::cerr << ": " << item.detail;
    std::cerr << "\n";
  }
  json doc;
  doc["schema"] = "graphvn-selftest/1";
  doc["passed"] = rep.all_passed();
  doc["items"] = json::array();
  for (const auto& item : rep.items)
    doc["items"].push_back(json{{"name", item.name},
                                {"passed", item.passed},
                                {"detail", item.detail}});
  emit(doc);
  return rep.all_passed() ? kOk : kComputation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted-graph operator algebra toolkit"};
  app.require_subcommand(1);

  std::string path, path_b, word_spec, edge_id, base, dump_path;
  bool normalize = false;
  int depth = 6;
  double tol = 1e-9;
  int max_n = 3;

  auto* validate = app.add_subcommand("validate", "check a graph file");
  validate->add_option("path", path, "graph JSON file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "isomorphism-class report");
  classify_cmd->add_option("path", path)->required();
  classify_cmd->add_flag("--normalize", normalize, "scale total mass to 1");
  classify_cmd->add_option("--base", base, "base vertex override");

  auto* cycle = app.add_subcommand("cycle-group", "loop-weight subgroup");
  cycle->add_option("path", path)->required();

  auto* state = app.add_subcommand("state", "vertex state and edge eigenvalues");
  state->add_option("path", path)->required();
  state->add_option("--base", base, "base vertex override");

  auto* moment = app.add_subcommand("moment", "word moment, exact and simulated");
  moment->add_option("path", path)->required();
  moment->add_option("--word", word_spec, "comma-separated edge ids, * = adjoint")
      ->required();
  moment->add_option("--depth", depth, "simulator truncation depth");
  moment->add_option("--tol", tol, "cross-check tolerance");
  moment->add_option("--base", base, "base vertex override");
  moment->add_option("--dump-basis", dump_path,
                     "write the path-space basis as 'index<TAB>path' lines");

  auto* eigen = app.add_subcommand("eigen-check", "exchange identity check");
  eigen->add_option("path", path)->required();
  eigen->add_option("--edge", edge_id, "edge id")->required();
  eigen->add_option("--word", word_spec, "comma-separated edge ids")->required();
  eigen->add_option("--base", base, "base vertex override");

  auto* tl = app.add_subcommand("tl-check", "diagram algebra inclusion check");
  tl->add_option("path_a", path)->required();
  tl->add_option("path_b", path_b)->required();
  tl->add_option("--max-n", max_n, "largest diagram size");

  auto* selftest = app.add_subcommand("selftest", "condensed property sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (classify_cmd->parsed()) return cmd_classify(path, normalize, base);
    if (cycle->parsed()) return cmd_cycle_group(path);
    if (state->parsed()) return cmd_state(path, base);
    if (moment->parsed())
      return cmd_moment(path, word_spec, depth, tol, base, dump_path);
    if (eigen->parsed()) return cmd_eigen_check(path, edge_id, word_spec, base);
    if (tl->parsed()) return cmd_tl_check(path, path_b, max_n);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kBadInput;
  } catch (const UnknownEdgeError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kBadInput;
  } catch (const std::exception& ex) {
    std::cerr << "computation error: " << ex.what() << "\n";
    return kComputation;
  }
  return kBadInput;
}
