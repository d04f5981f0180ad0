#pragma once

#include <optional>

#include "graphvn/lattice.hpp"

namespace graphvn {

// Index of a cyclic rotation whose running prefix products all stay >= 1.
// pre: weights nonempty with product >= 1. Construction: if every cyclic
// run already has product >= 1 return 0; otherwise rotate to start right
// after a minimal-product cyclic run.
std::size_t rotate_loop(const std::vector<Rational>& weights);

// Brute-force validity oracle: prefix products of the rotation starting at
// k all >= 1.
bool rotation_valid(const std::vector<Rational>& weights, std::size_t k);

// Shortest simple loop of weight != 1, reversed when its weight is below 1,
// then rotated so every prefix product is >= 1; lexicographic edge-id order
// breaks ties. Empty iff every loop has weight 1.
std::optional<Path> select_base_loop(const WeightedGraph& g);

struct Atom {
  int vertex;
  Rational mass;        // state(vertex) * deficiency
  Rational deficiency;  // 1 - sum of out-edge weights, > 0 when listed
};

struct DiffusePart {
  enum class Kind { FreeArakiWoods, Tracial, Absent };
  Kind kind = Kind::Absent;
  Rational weight = 0;
  // Tracial only:
  bool is_factor = false;
  std::string factor_reason;
};

// Atom mass at v: state(v) * max(0, 1 - sum of out-edge weights), the sum
// running over every edge sourced at v (op-edges and self-loops included).
Rational atom_mass(const WeightedGraph& g, const TracialData& td, int v);

struct ClassifyOptions {
  bool normalize = false;
  std::optional<std::string> base_override;
};

struct IsoClassReport {
  RationalLattice group;
  TracialData td;
  Rational state_total = 0;
  DiffusePart diffuse;
  std::vector<Atom> atoms;  // only vertices with deficiency > 0
  std::optional<Path> base_loop;
  bool normalized = false;

  json to_json(const WeightedGraph& g) const;  // schema graphvn-report/1
};

// Isomorphism-class data of the operator algebra attached to the graph:
// the loop-weight group decides the diffuse summand's type, vertices with
// out-weight sum below 1 carry atoms of mass state(v)*(1 - sum).
IsoClassReport classify(const WeightedGraph& g, const ClassifyOptions& opts = {});

// Free-dimension bookkeeping for the direct computations.
// Amplification by gamma: t -> 1 + (t - 1)/gamma^2.
Rational fdim_amplify(const Rational& t, const Rational& gamma);
// Complement parameter when the free complement carries two atoms a, b:
// (t*(a+b)^2 - 4ab) / b^2.
Rational fdim_complement_atomic(const Rational& t, const Rational& a,
                                const Rational& b);
// Complement parameter in the diffuse-plus-atom case: (t + 2(a^2+b^2-1))/b^2.
Rational fdim_complement_diffuse(const Rational& t, const Rational& a,
                                 const Rational& b);

}  // namespace graphvn
