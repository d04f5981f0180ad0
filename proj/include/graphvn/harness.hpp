#pragma once

#include <random>

#include "graphvn/graph.hpp"

namespace graphvn {

// Deterministic generators for property checks. All randomness flows from
// the caller's engine so runs are reproducible.
using Rng = std::mt19937_64;

// Positive rationals drawn from a small pool mixing values above and below 1.
Rational random_weight(Rng& rng);
Rational random_weight_above_1(Rng& rng);

// Connected graph: spanning tree plus up to `extra_pairs` chords (possibly
// parallel edges and self-loops) and an occasional self-paired loop.
WeightedGraph random_connected_graph(Rng& rng, int max_vertices, int extra_pairs);

// Single vertex with n two-sided self-loop pairs of the given weights.
WeightedGraph make_bouquet(const std::vector<Rational>& weights);

// Two vertices joined by one pair each way: e1: 0 -> 1 (w1), e2: 1 -> 0 (w2).
WeightedGraph make_two_cycle(const Rational& w1, const Rational& w2);

// Two vertices with n parallel pairs 0 -> 1 of the given weights.
WeightedGraph make_parallel(const std::vector<Rational>& weights);

// Directed n-cycle 0 -> 1 -> ... -> n-1 -> 0 with the given weights.
WeightedGraph make_cycle(const std::vector<Rational>& weights);

// Uniformly random word over all edges (length <= max_len, possibly
// non-composable).
std::vector<int> random_word(Rng& rng, const WeightedGraph& g, int max_len);

// Random composable loop at a random vertex, empty when none exists.
std::vector<int> random_loop(Rng& rng, const WeightedGraph& g, int len);

// All composable loops based at v of exactly the given length.
std::vector<std::vector<int>> loops_at(const WeightedGraph& g, int v, int len);

// All spanning trees as edge-index sets (one representative per pair),
// enumerated by testing every (V-1)-subset of the edge pairs.
std::vector<std::vector<int>> all_spanning_trees(const WeightedGraph& g);

// Same graph with fresh random vertex and edge names (scrambles the id
// ordering the algorithms scan in).
WeightedGraph relabel_graph(const WeightedGraph& g, Rng& rng);

// Same graph with every stored pair listed by its reverse edge instead
// (sources and targets swapped, weights inverted).
WeightedGraph reverse_orientation(const WeightedGraph& g);

}  // namespace graphvn
