#pragma once

#include <set>
#include <vector>

#include "graphvn/graph.hpp"

namespace graphvn {

// Row-style Hermite normal form, in place: echelon rows, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows dropped.
// Canonical for the integer row space.
void hermite_normal_form(std::vector<std::vector<Int>>& rows);

// Multiplicative subgroup of the positive rationals, represented by integer
// exponent vectors over a fixed ascending prime list, basis in HNF.
class RationalLattice {
 public:
  RationalLattice() = default;

  // Subgroup generated by the given positive rationals. The prime list is
  // the union of primes of `support` (defaults to the generators).
  static RationalLattice from_ratios(const std::vector<Rational>& generators,
                                     const std::vector<Rational>& support = {});

  int rank() const { return static_cast<int>(basis_.size()); }
  bool trivial() const { return basis_.empty(); }

  // Basis rows mapped back to rationals, one per HNF row.
  std::vector<Rational> generators() const;

  bool contains(const Rational& x) const;  // pre: x > 0

  const std::vector<Int>& primes() const { return primes_; }
  const std::vector<std::vector<Int>>& basis() const { return basis_; }

  json to_json() const;  // {"rank": r, "generators": ["p/q", ...]}

  friend bool operator==(const RationalLattice& a, const RationalLattice& b) {
    return a.primes_ == b.primes_ && a.basis_ == b.basis_;
  }

 private:
  std::vector<Int> primes_;
  std::vector<std::vector<Int>> basis_;
};

// BFS spanning tree from `base`, edges scanned in id order. Returns one tree
// edge per non-base vertex, oriented away from the base.
std::vector<int> spanning_tree(const WeightedGraph& g, int base);

// Multiplicative weights of the fundamental cycles of `tree` (one per
// non-tree edge pair: chord weight times the tree path closing it).
std::vector<Rational> fundamental_cycle_ratios(const WeightedGraph& g,
                                               const std::vector<int>& tree);

// Subgroup of the positive rationals generated by all loop weights.
// Trivial iff every loop has weight 1. Throws FactorError past the budget.
RationalLattice cycle_group(const WeightedGraph& g);
RationalLattice cycle_group_with_tree(const WeightedGraph& g,
                                      const std::vector<int>& tree);

// Maximal subgraph on all vertices whose loops all have weight 1, plus the
// vertex state it induces: state(base) = 1, state extended along tree edges
// by edge weight, tr_edges closed under everything consistent with state.
struct TracialData {
  int base = 0;
  std::vector<int> tree;      // spanning edges, oriented away from base
  std::set<int> tr_edges;     // closed under op
  std::vector<Rational> state;
};

// seed: edge indices of a simple path starting at base that must become the
// first tree edges (the remaining vertices are attached by BFS in id order).
TracialData tracial_subgraph(const WeightedGraph& g, int base,
                             const std::vector<int>& seed = {});

json tracial_data_json(const WeightedGraph& g, const TracialData& td);

// state(source)*weight/state(target); equals 1 exactly on tr_edges.
Rational edge_eigenvalue(const WeightedGraph& g, const TracialData& td, int edge);

}  // namespace graphvn
