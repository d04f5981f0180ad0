#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphvn/rational.hpp"

namespace graphvn {

using json = nlohmann::ordered_json;

// Directed edge with a paired reverse edge. weight(op(e)) == 1/weight(e);
// a self-paired edge is its own reverse: a weight-1 self-loop.
struct Edge {
  std::string id;
  int src = -1;
  int dst = -1;
  Rational weight;
  int op = -1;  // index of the paired edge; == own index when self-paired
  bool self_paired = false;
};

struct Violation {
  std::string code;     // stable machine key, e.g. "op-weight"
  std::string message;  // human text
  std::string where;    // offending vertex/edge id when applicable
};

struct UnknownEdgeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonComposableError : std::runtime_error {
  explicit NonComposableError(std::size_t at)
      : std::runtime_error("path breaks at position " + std::to_string(at)),
        position(at) {}
  std::size_t position;
};

// Finite connected weighted graph with edge involution. Vertices and edges
// are stored sorted by id so behaviour depends only on content.
class WeightedGraph {
 public:
  // Document layout:
  // {"vertices":["0","1"], "base":"0",
  //  "edges":[{"id":"e1","source":"0","target":"1","weight":"6/1"}, ...]}
  // Each listed edge stands for a pair {e, e^op}; the reverse edge is
  // synthesized with id "<id>^op" and inverted weight unless "self_paired".
  static WeightedGraph from_json(const json& doc);
  static WeightedGraph from_string(const std::string& text);
  static WeightedGraph from_file(const std::string& path);

  // Programmatic construction (ops must be supplied explicitly).
  WeightedGraph(std::vector<std::string> vertices, std::vector<Edge> edges,
                std::optional<std::string> base = std::nullopt);

  json to_json() const;

  // Structural invariants as data: involution, weights, connectivity,
  // self-pairing, id uniqueness. Empty result == valid.
  std::vector<Violation> validate() const;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(i); }
  const std::string& vertex_name(int i) const { return vertices_.at(i); }

  int vertex_index(const std::string& name) const;  // -1 when absent
  int edge_index(const std::string& id) const;      // -1 when absent
  int require_edge(const std::string& id) const;    // throws UnknownEdgeError

  const std::optional<std::string>& base_hint() const { return base_; }
  // Base vertex resolution: explicit override > file "base" > smallest id.
  int resolve_base(const std::optional<std::string>& override_name = {}) const;

  // Unordered pair classes {e, e^op}; a self-paired edge is a class of one.
  int pair_count() const;
  // Representative edge index per pair (the smaller index).
  std::vector<int> pair_representatives() const;

  const std::vector<int>& out_edges(int v) const { return out_.at(v); }

  Rational out_weight_sum(int v) const;

 private:
  WeightedGraph() = default;
  void index();
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::optional<std::string> base_;
  std::map<std::string, int> vindex_, eindex_;
  std::vector<std::vector<int>> out_;  // per-vertex out edges, id-sorted
};

// Composable edge sequence. weight = product of edge weights.
struct Path {
  std::vector<int> edges;
  int src = -1;
  int dst = -1;
  Rational weight = 1;
  bool is_loop() const { return src == dst; }
};

// Throws NonComposableError{i} when target(e_i) != source(e_{i+1}).
Path compose(const WeightedGraph& g, const std::vector<int>& edges);
Path compose_ids(const WeightedGraph& g, const std::vector<std::string>& ids);

// Reverse path: ops in reverse order. weight(reverse) == 1/weight.
Path reverse_path(const WeightedGraph& g, const Path& p);

// Loop rotated to start at edge position k (pre: p.is_loop()).
Path rotate_path(const WeightedGraph& g, const Path& p, std::size_t k);

std::vector<std::string> edge_ids(const WeightedGraph& g,
                                  const std::vector<int>& edges);

// All loops of length <= max_len that revisit no vertex except the base at
// the endpoints, enumerated over every base vertex, sorted lexicographically
// by edge-id sequence. Includes two-edge backtracks e,e^op between distinct
// vertices (weight 1).
std::vector<Path> simple_loops(const WeightedGraph& g, int max_len);

}  // namespace graphvn
