#include <doctest.h>

#include "graphvn/harness.hpp"
#include "graphvn/moments.hpp"

using namespace graphvn;

namespace {

WeightedGraph load_fixture(const char* name) {
  return WeightedGraph::from_file(std::string(FIXTURE_DIR) + "/" + name);
}

SurdScalar root(long num, long den = 1) {
  return SurdScalar::sqrt_of(Rational(num, den));
}

}  // namespace

TEST_CASE("word parsing handles stars") {
  WeightedGraph g = load_fixture("two_cycle.json");
  Word w = word_from_ids(g, {"e1*", "e2"});
  REQUIRE(w.size() == 2);
  CHECK(w[0].edge == g.edge_index("e1"));
  CHECK(w[0].star);
  CHECK(w[1].edge == g.edge_index("e2"));
  CHECK_FALSE(w[1].star);
  CHECK_THROWS_AS(word_from_ids(g, {"zz"}), UnknownEdgeError);
}

TEST_CASE("star elimination yields one square-root prefactor") {
  WeightedGraph g = load_fixture("two_cycle.json");
  NormalizedWord nw = normalize_word(g, word_from_ids(g, {"e1*", "e1"}));
  CHECK(nw.prefactor == root(6));
  CHECK(nw.edges ==
        std::vector<int>{g.edge_index("e1^op"), g.edge_index("e1")});
}

TEST_CASE("adjoint is an involution") {
  WeightedGraph g = load_fixture("two_cycle.json");
  Word w = word_from_ids(g, {"e1", "e2*", "e1*"});
  CHECK(adjoint_word(adjoint_word(w)) == w);
  CHECK(adjoint_word(w)[0].edge == g.edge_index("e1"));
  CHECK(adjoint_word(w)[0].star == false);
}

TEST_CASE("pairing coefficients on the two cycle") {
  WeightedGraph g = load_fixture("two_cycle.json");
  int e1 = g.edge_index("e1"), r1 = g.edge_index("e1^op");
  CHECK(expectation_coefficient(g, std::vector<int>{e1, r1}) == root(6));
  CHECK(expectation_coefficient(g, std::vector<int>{e1, r1, e1, r1}) ==
        SurdScalar(Rational(7)));
  CHECK(expectation_coefficient(g, std::vector<int>{}) == SurdScalar(Rational(1)));
}

TEST_CASE("degenerate words have zero coefficient") {
  WeightedGraph g = load_fixture("two_cycle.json");
  int e1 = g.edge_index("e1");
  // Odd length.
  CHECK(expectation_coefficient(g, std::vector<int>{e1}).is_zero());
  // Non-composable.
  CHECK(expectation_coefficient(g, std::vector<int>{e1, e1}).is_zero());
  // Composable but not a loop.
  WeightedGraph t = load_fixture("triangle.json");
  std::vector<int> path = {t.edge_index("e1"), t.edge_index("e2")};
  CHECK(expectation_coefficient(g, path).is_zero());
}

TEST_CASE("length budget is enforced") {
  WeightedGraph g = load_fixture("two_cycle.json");
  std::vector<int> edges;
  for (int i = 0; i < 9; ++i) {
    edges.push_back(g.edge_index("e1"));
    edges.push_back(g.edge_index("e1^op"));
  }
  CHECK_THROWS_AS(expectation_coefficient(g, edges), MomentBudgetError);
}

TEST_CASE("crossing-only words vanish") {
  WeightedGraph g = load_fixture("bouquet.json");
  std::vector<int> w = {g.edge_index("e1"), g.edge_index("e2"),
                        g.edge_index("e1^op"), g.edge_index("e2^op")};
  CHECK(expectation_coefficient(g, w).is_zero());
}

TEST_CASE("nested pairs multiply square roots") {
  WeightedGraph g = load_fixture("bouquet.json");
  std::vector<int> w = {g.edge_index("e1"), g.edge_index("e2"),
                        g.edge_index("e2^op"), g.edge_index("e1^op")};
  CHECK(expectation_coefficient(g, w) == root(6));
}

TEST_CASE("generators at one vertex are free") {
  WeightedGraph g = load_fixture("bouquet.json");
  TracialData td = tracial_subgraph(g, 0);
  Word a = word_from_ids(g, {"e1", "e1^op"});
  Word b = word_from_ids(g, {"e2", "e2^op"});
  Word ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  // Centered product of moments from distinct pairs vanishes.
  CHECK(phi_moment(g, td, ab) - phi_moment(g, td, a) * phi_moment(g, td, b) ==
        SurdScalar());
}

TEST_CASE("state-weighted moments on the two cycle") {
  WeightedGraph g = load_fixture("two_cycle.json");
  TracialData td = tracial_subgraph(g, g.resolve_base());
  CHECK(phi_moment(g, td, word_from_ids(g, {"e1", "e1^op"})) == root(6));
  CHECK(phi_moment(g, td, word_from_ids(g, {"e2", "e2^op"})) ==
        SurdScalar(Rational(6)) * root(1, 3));  // 2*sqrt(3)
  CHECK(phi_moment(g, td, word_from_ids(g, {"e2^op", "e2"})) == root(3));
  CHECK(phi_moment(g, td, word_from_ids(g, {"e1*", "e1"})) ==
        SurdScalar(Rational(6)));
  CHECK_THROWS_AS(phi_moment(g, td, Word{}), std::invalid_argument);
}

TEST_CASE("exchange identity with frozen values") {
  WeightedGraph g = load_fixture("two_cycle.json");
  TracialData td = tracial_subgraph(g, g.resolve_base());
  EigenCheck ec = check_eigen_identity(g, td, g.edge_index("e2^op"),
                                       word_from_ids(g, {"e2"}));
  CHECK(ec.eigenvalue == Rational(1, 2));
  CHECK(ec.lhs == root(3));
  CHECK(ec.rhs == SurdScalar(Rational(2)) * root(3));
  CHECK(ec.holds);
}

TEST_CASE("exchange identity holds on random loops") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    WeightedGraph g = random_connected_graph(rng, 4, 2);
    TracialData td = tracial_subgraph(g, g.resolve_base());
    for (int k = 0; k < 4; ++k) {
      auto loop = random_loop(rng, g, 2 + 2 * static_cast<int>(rng() % 3));
      if (loop.empty()) continue;
      for (int e = 0; e < g.edge_count(); ++e) {
        EigenCheck ec = check_eigen_identity(g, td, e, plain_word(loop));
        CHECK(ec.holds);
        if (td.tr_edges.count(e)) CHECK(ec.eigenvalue == Rational(1));
      }
    }
  }
}

TEST_CASE("gram matrices of short loops") {
  WeightedGraph g = load_fixture("two_cycle.json");
  TracialData td = tracial_subgraph(g, g.resolve_base());
  int v0 = g.vertex_index("0");

  Word loop = word_from_ids(g, {"e1", "e2"});
  auto gram1 = gram_matrix(g, td, {word_from_ids(g, {"e1", "e1^op"})}, v0);
  CHECK(gram1[0][0] == SurdScalar(Rational(7)));

  auto gram2 = gram_matrix(g, td, {Word{}, word_from_ids(g, {"e1", "e1^op"})}, v0);
  CHECK(gram2[0][0] == SurdScalar(Rational(1)));
  CHECK(gram2[0][1] == root(6));
  CHECK(gram2[1][0] == root(6));
  CHECK(gram2[1][1] == SurdScalar(Rational(7)));
  // det = 7 - 6 = 1
  CHECK(gram2[0][0] * gram2[1][1] - gram2[0][1] * gram2[1][0] ==
        SurdScalar(Rational(1)));

  CHECK_THROWS_AS(gram_matrix(g, td, {word_from_ids(g, {"e2", "e2^op"})}, v0),
                  VertexMismatchError);
  CHECK_THROWS_AS(gram_matrix(g, td, {word_from_ids(g, {"e1"})}, v0),
                  VertexMismatchError);
  CHECK_NOTHROW(gram_matrix(g, td, {loop}, v0));
}
