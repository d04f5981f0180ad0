#pragma once

#include "graphvn/moments.hpp"

namespace graphvn {

// Non-crossing perfect matching of 2n boundary points (0-indexed).
struct TLDiagram {
  int n = 0;
  std::vector<int> partner;  // involution on [0, 2n)

  static TLDiagram empty() { return {0, {}}; }
  // pre: pairs form a non-crossing perfect matching of [0, 2n).
  static TLDiagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  std::vector<std::pair<int, int>> pairs() const;  // (i, j) with i < j
  std::string str() const;                         // "(0 3)(1 2)"
};

// All non-crossing pairings of [0, 2n), lexicographic; Catalan(n) many.
std::vector<TLDiagram> enumerate_diagrams(int n);

// Side-by-side product: b's points shifted past a's.
TLDiagram tensor(const TLDiagram& a, const TLDiagram& b);

// Closed circles formed by gluing x against sigma (same point count):
// cycles of the composed involutions, halved.
int loop_count(const TLDiagram& x, const TLDiagram& sigma);

enum class TraceNormalization {
  PerStrand,      // delta^(loops - n)
  Unnormalized,   // delta^loops
};

// Multiplicity of each delta power over all closing pairings.
std::map<int, long> trace_exponents(const TLDiagram& x, TraceNormalization norm);
// Diagrammatic trace: sum over closing non-crossing pairings of
// delta^loop_count, normalized per `norm`.
Rational voiculescu_trace(const TLDiagram& x, const Rational& delta,
                          TraceNormalization norm = TraceNormalization::PerStrand);

struct BalanceReport {
  bool balanced = false;
  Rational delta = 0;                // meaningful when balanced
  std::vector<Rational> vertex_sums; // out-weight sum per vertex
  std::string reason;                // when not balanced
};
// Balanced: every vertex has the same out-weight sum and it is >= 2.
BalanceReport is_balanced(const WeightedGraph& g);

// Exponent applied to the pair weights of the inclusion.
enum class InclusionExponent { Half, One };

// Formal combination of loops at a vertex with exact scalar coefficients.
using LoopPolynomial = std::map<std::vector<int>, SurdScalar>;

// Image of a diagram in the loop algebra at `v`: sum over edge labelings
// compatible with the pairing (each pair carries e and op(e)), weighted by
// the product of weight(e_i)^a over pairs (i < j).
LoopPolynomial inclusion_map(const WeightedGraph& g, int v, const TLDiagram& x,
                             InclusionExponent a);

// Loop-algebra state applied to a combination: coefficient-weighted sum of
// expectation coefficients.
SurdScalar loop_state(const WeightedGraph& g, const LoopPolynomial& p);

struct DeltaMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Calibration {
  InclusionExponent exponent;
  TraceNormalization normalization;
};

// Finds the unique (exponent, normalization) under which the diagram trace
// matches the loop-algebra state of the inclusion for n <= 1, at every
// vertex of both graphs. Throws when none or several survive.
Calibration calibrate_inclusion(const WeightedGraph& a, const WeightedGraph& b);

struct InclusionReport {
  Rational delta;
  Calibration calibration;
  struct DiagramCheck {
    std::string diagram;
    std::string value_a;    // loop state on graph a (all vertices agree)
    std::string value_b;
    std::string trace;
    bool graph_independent;
    bool matches_trace;
  };
  std::vector<DiagramCheck> diagrams;
  struct TraceCheck {
    std::string left, right;  // str of the two products
    bool commutes;
  };
  std::vector<TraceCheck> tracial_pairs;
  bool negative_control_failed;  // the rejected exponent fails at n == 1
  bool ok;

  json to_json() const;
};

// Full bridge check: calibrates at n <= 1, then verifies graph independence
// and trace equality for all diagrams with n <= max_n and traciality of the
// induced state on diagram products. pre: max_n <= 4.
InclusionReport verify_inclusion(const WeightedGraph& a, const WeightedGraph& b,
                                 int max_n);

}  // namespace graphvn
