#pragma once

#include <cstddef>
#include <map>

#include "graphvn/moments.hpp"

namespace graphvn {

struct BasisTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WordExceedsDepthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBasisCap = 2'000'000;

// Orthonormal basis of the path space truncated at `depth`: one entry per
// vertex (the empty path there) and one per composable edge path of length
// <= depth.
class FockBasis {
 public:
  struct Element {
    int vertex;              // source vertex; the whole path for empty edges
    std::vector<int> edges;  // composable, possibly empty
  };

  static FockBasis build(const WeightedGraph& g, int depth,
                         std::size_t max_entries = kDefaultBasisCap);

  int depth() const { return depth_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_[i]; }
  std::size_t vertex_state(int v) const { return static_cast<std::size_t>(v); }
  // npos when the path is absent (deeper than the truncation).
  std::size_t find(const std::vector<int>& edges) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  int depth_ = 0;
  std::vector<Element> elements_;
  std::map<std::vector<int>, std::size_t> index_;
};

// Real sparse operator in triplet form on the basis coordinates.
struct SparseOperator {
  std::size_t dim = 0;
  struct Entry {
    std::size_t row, col;
    double value;
  };
  std::vector<Entry> entries;

  std::vector<double> apply(const std::vector<double>& x) const;
};

SparseOperator multiply(const SparseOperator& a, const SparseOperator& b);
// Max absolute entry difference (operators on the same basis).
double max_entry_difference(const SparseOperator& a, const SparseOperator& b);

// Creation by e: prepends e to composable paths (dropped past the depth).
SparseOperator creation_operator(const WeightedGraph& g, const FockBasis& b, int e);
// Annihilation: removes a leading e, pairing <e|e>_A = p_{target(e)}.
SparseOperator annihilation_operator(const WeightedGraph& g, const FockBasis& b, int e);
// Left multiplication by the vertex projection p_v.
SparseOperator vertex_projection(const WeightedGraph& g, const FockBasis& b, int v);
// Y_e = creation(e) + sqrt(weight(e)) * annihilation(op(e)).
SparseOperator y_operator(const WeightedGraph& g, const FockBasis& b, int e);

// <p_v, Y_{e_1} ... Y_{e_n} p_v>; exact up to rounding when n <= depth.
double vacuum_expectation(const WeightedGraph& g, const FockBasis& b,
                          const std::vector<int>& word, int v);

struct CrossCheck {
  struct Item {
    std::vector<std::string> word;
    double series;     // pairing-formula value, as a double
    double simulated;  // state(src) * vacuum expectation
    double deviation;
  };
  std::vector<Item> items;
  double max_deviation = 0;
  bool ok = true;
};

// Evaluates each word through the pairing formula and the truncated
// simulator; fock operators are built from `fock_graph`, which defaults to
// the same graph (pass a perturbed copy to prove the check has teeth).
CrossCheck cross_validate(const WeightedGraph& g, const TracialData& td,
                          const std::vector<std::vector<int>>& words, int depth,
                          double tol,
                          const WeightedGraph* fock_graph = nullptr,
                          std::size_t max_entries = kDefaultBasisCap);

}  // namespace graphvn
