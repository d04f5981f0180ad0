#pragma once

#include "graphvn/lattice.hpp"
#include "graphvn/surd.hpp"

namespace graphvn {

// Word in the edge operators and their adjoints.
struct WordLetter {
  int edge;
  bool star = false;
  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};
using Word = std::vector<WordLetter>;

Word word_from_ids(const WeightedGraph& g, const std::vector<std::string>& ids);

// Star-free word over edge indices.
Word plain_word(const std::vector<int>& edges);

// Star elimination: a starred letter on edge e becomes sqrt(weight(e)) times
// the letter on op(e). The combined prefactor is a single sqrt-monomial.
struct NormalizedWord {
  SurdScalar prefactor;
  std::vector<int> edges;
};
NormalizedWord normalize_word(const WeightedGraph& g, const Word& w);

// Adjoint: reverse order, toggle stars.
Word adjoint_word(const Word& w);

// Longest word the pairing enumeration accepts.
inline constexpr std::size_t kMaxMomentLength = 16;

struct MomentBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient alpha with E(word) = alpha * p_{source(e_1)}: the sum over
// non-crossing pair partitions where each pair (i < j) requires
// e_j == op(e_i) and contributes sqrt(weight(e_i)). Zero for words of odd
// length, non-composable words, and non-loops.
SurdScalar expectation_coefficient(const WeightedGraph& g,
                                   const std::vector<int>& edges);
SurdScalar expectation_coefficient(const WeightedGraph& g, const Word& w);

// state(source(e_1)) * expectation_coefficient. Empty words are rejected;
// the moment of a bare vertex projection is state(v) itself.
SurdScalar phi_moment(const WeightedGraph& g, const TracialData& td, const Word& w);

struct EigenCheck {
  SurdScalar lhs;         // moment of edge * word
  SurdScalar rhs;         // moment of word * edge
  Rational eigenvalue;    // state(src)*weight/state(dst)
  bool holds;             // lhs == eigenvalue * rhs
};
// Exchange identity: moving the edge operator across the word multiplies the
// moment by the edge eigenvalue.
EigenCheck check_eigen_identity(const WeightedGraph& g, const TracialData& td,
                                int edge, const Word& w);

struct VertexMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// G[i][j] = phi_moment(adjoint(w_i) . w_j). All words must be loops at v.
std::vector<std::vector<SurdScalar>> gram_matrix(const WeightedGraph& g,
                                                 const TracialData& td,
                                                 const std::vector<Word>& words,
                                                 int v);

}  // namespace graphvn
