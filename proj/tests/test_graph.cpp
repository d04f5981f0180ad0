#include <doctest.h>

#include <algorithm>

#include "graphvn/graph.hpp"
#include "graphvn/harness.hpp"

using namespace graphvn;

namespace {

const char* kTwoCycle = R"({
  "vertices": ["0", "1"],
  "base": "0",
  "edges": [
    {"id": "e1", "source": "0", "target": "1", "weight": "6/1"},
    {"id": "e2", "source": "1", "target": "0", "weight": "1/3"}
  ]
})";

}  // namespace

TEST_CASE("parsing synthesizes reverse edges") {
  WeightedGraph g = WeightedGraph::from_string(kTwoCycle);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 4);
  CHECK(g.pair_count() == 2);
  CHECK(g.validate().empty());

  int e1 = g.edge_index("e1"), r1 = g.edge_index("e1^op");
  REQUIRE(e1 >= 0);
  REQUIRE(r1 >= 0);
  CHECK(g.edge(e1).weight == Rational(6));
  CHECK(g.edge(r1).weight == Rational(1, 6));
  CHECK(g.edge(e1).op == r1);
  CHECK(g.edge(r1).op == e1);
  CHECK(g.edge(e1).src == g.edge(r1).dst);
  CHECK(g.edge(e1).dst == g.edge(r1).src);
}

TEST_CASE("edges are stored sorted by id") {
  WeightedGraph g = WeightedGraph::from_string(kTwoCycle);
  std::vector<std::string> ids;
  for (auto& e : g.edges()) ids.push_back(e.id);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("base resolution precedence") {
  WeightedGraph g = WeightedGraph::from_string(kTwoCycle);
  CHECK(g.resolve_base() == g.vertex_index("0"));           // file base
  CHECK(g.resolve_base(std::string("1")) == g.vertex_index("1"));  // override
}

TEST_CASE("out edges and weight sums") {
  WeightedGraph g = WeightedGraph::from_string(kTwoCycle);
  CHECK(g.out_weight_sum(g.vertex_index("0")) == Rational(9));      // 6 + 3
  CHECK(g.out_weight_sum(g.vertex_index("1")) == Rational(1, 2));   // 1/6 + 1/3
}

TEST_CASE("serialization lists one edge per pair") {
  WeightedGraph g = WeightedGraph::from_string(kTwoCycle);
  json doc = g.to_json();
  CHECK(doc["edges"].size() == 2);
  WeightedGraph h = WeightedGraph::from_json(doc);
  CHECK(h.edge_count() == 4);
  CHECK(h.to_json() == doc);
}

TEST_CASE("validation flags weight and involution defects") {
  // Reverse weight must be the exact inverse.
  std::vector<Edge> edges(2);
  edges[0] = {"a", 0, 1, Rational(2), 1, false};
  edges[1] = {"a^op", 1, 0, Rational(1, 3), 0, false};
  WeightedGraph g({"x", "y"}, edges);
  auto v = g.validate();
  REQUIRE_FALSE(v.empty());
  CHECK(std::any_of(v.begin(), v.end(),
                    [](const Violation& w) { return w.code == "op-weight"; }));
}

TEST_CASE("validation flags self-pair defects") {
  WeightedGraph g = WeightedGraph::from_string(R"({
    "vertices": ["0"],
    "edges": [{"id": "e", "source": "0", "target": "0",
               "weight": "2/1", "self_paired": true}]
  })");
  auto v = g.validate();
  REQUIRE_FALSE(v.empty());
  CHECK(std::any_of(v.begin(), v.end(), [](const Violation& w) {
    return w.code == "self-pair-weight";
  }));
}

TEST_CASE("validation flags disconnected graphs") {
  WeightedGraph g = WeightedGraph::from_string(R"({
    "vertices": ["0", "1", "2"],
    "edges": [{"id": "e", "source": "0", "target": "1", "weight": "2/1"}]
  })");
  auto v = g.validate();
  CHECK(std::any_of(v.begin(), v.end(),
                    [](const Violation& w) { return w.code == "disconnected"; }));
}

TEST_CASE("validation flags unknown base and endpoints") {
  WeightedGraph g = WeightedGraph::from_string(R"({
    "vertices": ["0"],
    "base": "zz",
    "edges": [{"id": "e", "source": "0", "target": "q", "weight": "2/1"}]
  })");
  auto v = g.validate();
  CHECK(std::any_of(v.begin(), v.end(),
                    [](const Violation& w) { return w.code == "base"; }));
  CHECK(std::any_of(v.begin(), v.end(),
                    [](const Violation& w) { return w.code == "endpoint"; }));
}

TEST_CASE("validation flags duplicate ids") {
  WeightedGraph g = WeightedGraph::from_string(R"({
    "vertices": ["0", "1"],
    "edges": [
      {"id": "e", "source": "0", "target": "1", "weight": "2/1"},
      {"id": "e", "source": "1", "target": "0", "weight": "3/1"}
    ]
  })");
  auto v = g.validate();
  CHECK(std::any_of(v.begin(), v.end(),
                    [](const Violation& w) { return w.code == "edge-dup"; }));
}

TEST_CASE("path composition tracks weight and endpoints") {
  WeightedGraph g = WeightedGraph::from_string(kTwoCycle);
  Path p = compose_ids(g, {"e1", "e2"});
  CHECK(p.is_loop());
  CHECK(p.src == g.vertex_index("0"));
  CHECK(p.weight == Rational(2));

  Path r = reverse_path(g, p);
  CHECK(r.weight == Rational(1, 2));
  CHECK(edge_ids(g, r.edges) == std::vector<std::string>{"e2^op", "e1^op"});

  Path rot = rotate_path(g, p, 1);
  CHECK(edge_ids(g, rot.edges) == std::vector<std::string>{"e2", "e1"});
  CHECK(rot.src == g.vertex_index("1"));
}

TEST_CASE("non-composable sequences report the break position") {
  WeightedGraph g = WeightedGraph::from_string(kTwoCycle);
  try {
    compose_ids(g, {"e1", "e1"});
    FAIL("expected NonComposableError");
  } catch (const NonComposableError& ex) {
    CHECK(ex.position == 1);  // index of the letter that failed to attach
  }
}

TEST_CASE("simple loop enumeration on the two cycle") {
  WeightedGraph g = WeightedGraph::from_string(kTwoCycle);
  auto loops = simple_loops(g, 2);
  CHECK(loops.size() == 8);  // four based at each vertex
  for (auto& p : loops) {
    CHECK(p.edges.size() == 2);
    CHECK(p.is_loop());
  }
  // Lexicographically sorted by edge-id sequence.
  std::vector<std::vector<std::string>> keys;
  for (auto& p : loops) keys.push_back(edge_ids(g, p.edges));
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("simple loops exclude interior revisits") {
  WeightedGraph g = make_bouquet({Rational(2), Rational(3)});
  auto loops = simple_loops(g, 2);
  // Only the four single self-loops: two-step words revisit the base.
  CHECK(loops.size() == 4);
  for (auto& p : loops) CHECK(p.edges.size() == 1);
}

TEST_CASE("relabeling and reversal preserve structure") {
  Rng rng(7);
  WeightedGraph g = WeightedGraph::from_string(kTwoCycle);
  WeightedGraph h = relabel_graph(g, rng);
  CHECK(h.validate().empty());
  CHECK(h.vertex_count() == 2);
  CHECK(h.pair_count() == 2);

  WeightedGraph r = reverse_orientation(g);
  CHECK(r.validate().empty());
  CHECK(r.edge(r.edge_index("e1")).weight == Rational(1, 6));
  CHECK(r.edge(r.edge_index("e1")).src == r.vertex_index("1"));
}
