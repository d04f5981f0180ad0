#include <doctest.h>

#include "graphvn/classify.hpp"
#include "graphvn/harness.hpp"

using namespace graphvn;

namespace {

WeightedGraph load_fixture(const char* name) {
  return WeightedGraph::from_file(std::string(FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("loop rotation picks a prefix-stable start") {
  CHECK(rotate_loop({Rational(1, 2), Rational(3), Rational(1)}) == 1);
  CHECK(rotate_loop({Rational(2), Rational(2)}) == 0);
  CHECK(rotate_loop({Rational(1, 4), Rational(4)}) == 1);
  CHECK(rotate_loop({Rational(2), Rational(1, 2), Rational(2), Rational(1, 2)}) == 2);
  CHECK(rotate_loop({Rational(1)}) == 0);

  CHECK_THROWS_AS(rotate_loop({}), std::invalid_argument);
  CHECK_THROWS_AS(rotate_loop({Rational(1, 2)}), std::invalid_argument);
}

TEST_CASE("chosen rotation is always valid") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Rational> ws;
    Rational prod = 1;
    for (int i = 0; i < n; ++i) {
      ws.push_back(random_weight(rng));
      prod *= ws.back();
    }
    if (prod < 1) continue;
    CHECK(rotation_valid(ws, rotate_loop(ws)));
  }
}

TEST_CASE("base loop of the two cycle") {
  WeightedGraph g = load_fixture("two_cycle.json");
  auto loop = select_base_loop(g);
  REQUIRE(loop.has_value());
  CHECK(edge_ids(g, loop->edges) == std::vector<std::string>{"e1", "e2"});
  CHECK(loop->src == g.vertex_index("0"));
  CHECK(loop->weight == Rational(2));
}

TEST_CASE("base loop reverses below-1 loops") {
  WeightedGraph g = make_bouquet({Rational(1, 2)});
  auto loop = select_base_loop(g);
  REQUIRE(loop.has_value());
  CHECK(edge_ids(g, loop->edges) == std::vector<std::string>{"e1^op"});
  CHECK(loop->weight == Rational(2));
}

TEST_CASE("no base loop when every loop has weight 1") {
  CHECK_FALSE(select_base_loop(load_fixture("triangle.json")).has_value());
}

TEST_CASE("two cycle report") {
  WeightedGraph g = load_fixture("two_cycle.json");
  IsoClassReport rep = classify(g);

  CHECK(rep.group.rank() == 1);
  CHECK(rep.group.generators() == std::vector<Rational>{Rational(2)});
  CHECK(rep.diffuse.kind == DiffusePart::Kind::FreeArakiWoods);
  CHECK(rep.state_total == Rational(7));
  CHECK(rep.diffuse.weight == Rational(4));
  REQUIRE(rep.atoms.size() == 1);
  CHECK(rep.atoms[0].vertex == g.vertex_index("1"));
  CHECK(rep.atoms[0].mass == Rational(3));
  CHECK(rep.atoms[0].deficiency == Rational(1, 2));

  json doc = rep.to_json(g);
  CHECK(doc["schema"] == "graphvn-report/1");
  CHECK(doc["diffuse"]["kind"] == "free_araki_woods");
  CHECK(doc["diffuse"]["generators"] == json::array({"2/1"}));
  CHECK(doc["diffuse"]["weight"] == "4/1");
  CHECK(doc["base_loop"]["edges"] == json::array({"e1", "e2"}));
  CHECK(doc["base_loop"]["base"] == "0");
  CHECK(doc["base_loop"]["weight"] == "2/1");
  CHECK(doc["state"]["0"] == "1/1");
  CHECK(doc["state"]["1"] == "6/1");
  CHECK(doc["atoms"][0]["vertex"] == "1");
  CHECK(doc["atoms"][0]["mass"] == "3/1");
  CHECK(doc["normalized"] == false);
}

TEST_CASE("atom mass clamps negative deficiencies to zero") {
  WeightedGraph g = load_fixture("two_cycle.json");
  IsoClassReport rep = classify(g);
  CHECK(atom_mass(g, rep.td, g.vertex_index("1")) == Rational(3));
  // out-weight sum 9 at the base: deficiency 1 - 9 < 0 clamps to 0.
  CHECK(atom_mass(g, rep.td, g.vertex_index("0")) == Rational(0));
  CHECK(atom_mass(g, rep.td, g.vertex_index("1")) == rep.atoms[0].mass);
}

TEST_CASE("normalization rescales masses only") {
  WeightedGraph g = load_fixture("two_cycle.json");
  IsoClassReport rep = classify(g, {.normalize = true});
  CHECK(rep.state_total == Rational(1));
  CHECK(rep.atoms[0].mass == Rational(3, 7));
  CHECK(rep.diffuse.weight == Rational(4, 7));
  CHECK(rep.normalized);
  // The vertex state itself stays in the loop frame.
  CHECK(rep.td.state[g.vertex_index("1")] == Rational(6));
}

TEST_CASE("bouquet report is purely diffuse") {
  WeightedGraph g = load_fixture("bouquet.json");
  IsoClassReport rep = classify(g);
  CHECK(rep.group.rank() == 2);
  CHECK(rep.diffuse.kind == DiffusePart::Kind::FreeArakiWoods);
  CHECK(rep.atoms.empty());
  CHECK(rep.state_total == Rational(1));
  CHECK(rep.diffuse.weight == Rational(1));
  REQUIRE(rep.base_loop.has_value());
  CHECK(edge_ids(g, rep.base_loop->edges) == std::vector<std::string>{"e1"});
}

TEST_CASE("triangle report is tracial with an atom") {
  WeightedGraph g = load_fixture("triangle.json");
  IsoClassReport rep = classify(g);
  CHECK(rep.group.trivial());
  CHECK(rep.diffuse.kind == DiffusePart::Kind::Tracial);
  CHECK(rep.state_total == Rational(9));
  CHECK(rep.diffuse.weight == Rational(6));
  REQUIRE(rep.atoms.size() == 1);
  CHECK(rep.atoms[0].vertex == g.vertex_index("2"));
  CHECK(rep.atoms[0].mass == Rational(3));
  CHECK_FALSE(rep.diffuse.is_factor);
  CHECK(rep.diffuse.factor_reason == "out-weight sum below 1 at vertex 2");
  CHECK_FALSE(rep.base_loop.has_value());

  json doc = rep.to_json(g);
  CHECK(doc["diffuse"]["kind"] == "tracial");
  CHECK(doc["diffuse"]["is_factor"] == false);
  CHECK(doc["diffuse"]["free_group_parameter"] == "unspecified (see prior work)");
  CHECK(doc["base_loop"].is_null());
}

TEST_CASE("base override moves the state frame in the tracial case") {
  WeightedGraph g = load_fixture("triangle.json");
  IsoClassReport rep = classify(g, {.base_override = std::string("1")});
  CHECK(rep.td.state[g.vertex_index("1")] == Rational(1));
  CHECK(rep.td.state[g.vertex_index("0")] == Rational(1, 2));
  CHECK(rep.td.state[g.vertex_index("2")] == Rational(3));
  CHECK(rep.state_total == Rational(9, 2));
  CHECK(rep.atoms[0].mass == Rational(3, 2));
}

TEST_CASE("single pair is tracial but not a factor") {
  WeightedGraph g = WeightedGraph::from_string(R"({
    "vertices": ["0", "1"],
    "edges": [{"id": "e", "source": "0", "target": "1", "weight": "1/1"}]
  })");
  IsoClassReport rep = classify(g);
  CHECK(rep.diffuse.kind == DiffusePart::Kind::Tracial);
  CHECK_FALSE(rep.diffuse.is_factor);
  CHECK(rep.diffuse.factor_reason == "fewer than two edge pairs");
  CHECK(rep.atoms.empty());
}

TEST_CASE("factor when every out-weight sum reaches 1") {
  // Square with unit weights: trivial group, no deficiencies, >= 2 pairs.
  WeightedGraph g = make_cycle(
      {Rational(1), Rational(1), Rational(1), Rational(1)});
  IsoClassReport rep = classify(g);
  CHECK(rep.diffuse.kind == DiffusePart::Kind::Tracial);
  CHECK(rep.diffuse.is_factor);
  CHECK(rep.diffuse.factor_reason == "factor");
  CHECK(rep.atoms.empty());
}

TEST_CASE("isolated vertex is purely atomic") {
  WeightedGraph g = WeightedGraph::from_string(R"({
    "vertices": ["0"],
    "edges": []
  })");
  IsoClassReport rep = classify(g);
  CHECK(rep.diffuse.kind == DiffusePart::Kind::Absent);
  REQUIRE(rep.atoms.size() == 1);
  CHECK(rep.atoms[0].mass == Rational(1));
  CHECK(rep.to_json(g)["diffuse"]["kind"] == "absent");
}

TEST_CASE("parallel pair fixture carries the expected atom") {
  WeightedGraph g = load_fixture("parallel_pairs.json");
  IsoClassReport rep = classify(g);
  CHECK(rep.diffuse.kind == DiffusePart::Kind::FreeArakiWoods);
  REQUIRE(rep.atoms.size() == 1);
  CHECK(rep.atoms[0].deficiency == Rational(1, 12));
  CHECK(rep.atoms[0].mass == Rational(1, 2));
}

TEST_CASE("free-dimension bookkeeping") {
  CHECK(fdim_amplify(Rational(2), Rational(2)) == Rational(5, 4));
  CHECK(fdim_amplify(Rational(1), Rational(7, 3)) == Rational(1));
  CHECK_THROWS_AS(fdim_amplify(Rational(2), Rational(0)), std::invalid_argument);

  // Matched two-atom complement collapses to parameter 1.
  Rational a(1, 3), b(1, 3);
  Rational tpp = Rational(2) - (b - a) * (b - a) / (b * b);
  Rational t = fdim_amplify(tpp, (a + b) / b);
  CHECK(t == Rational(5, 4));
  CHECK(fdim_complement_atomic(t, a, b) == Rational(1));

  // Diffuse complement: the two boundary inputs of the second computation.
  a = Rational(1, 3);
  b = Rational(2, 3);
  Rational top = fdim_complement_diffuse(1 + 2 * a * b, a, b);
  CHECK(top == (a * a + b * b) / (b * b));
  CHECK(top > 1);
  CHECK(fdim_complement_diffuse(1 + 2 * a * b - a * a, a, b) == Rational(1));

  CHECK_THROWS_AS(fdim_complement_atomic(Rational(1), Rational(1), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(fdim_complement_diffuse(Rational(1), Rational(1), Rational(0)),
                  std::invalid_argument);
}
