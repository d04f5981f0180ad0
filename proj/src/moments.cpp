#include "graphvn/moments.hpp"

#include <functional>

namespace graphvn {

Word word_from_ids(const WeightedGraph& g, const std::vector<std::string>& ids) {
  Word w;
  for (auto id : ids) {
    bool star = false;
    if (!id.empty() && id.back() == '*') {
      star = true;
      id.pop_back();
    }
    w.push_back({g.require_edge(id), star});
  }
  return w;
}

Word plain_word(const std::vector<int>& edges) {
  Word w;
  for (int e : edges) w.push_back({e, false});
  return w;
}

NormalizedWord normalize_word(const WeightedGraph& g, const Word& w) {
  NormalizedWord out;
  Rational under_root = 1;
  for (auto& letter : w) {
    if (letter.star) {
      under_root *= g.edge(letter.edge).weight;
      out.edges.push_back(g.edge(letter.edge).op);
    } else {
      out.edges.push_back(letter.edge);
    }
  }
  out.prefactor = SurdScalar::sqrt_of(under_root);
  return out;
}

Word adjoint_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->edge, !it->star});
  return out;
}

namespace {

// Pairs position `l` with each admissible partner, splitting the interval:
// non-crossing means the partner leaves even-length gaps on both sides.
SurdScalar pair_sum(const WeightedGraph& g, const std::vector<int>& edges,
                    std::vector<int>& positions) {
  if (positions.empty()) return SurdScalar(Rational(1));
  SurdScalar total;
  const int first = positions.front();
  for (std::size_t m = 1; m < positions.size(); m += 2) {
    const int partner = positions[m];
    if (g.edge(edges[partner]).op != edges[first]) continue;  // delta pruning
    std::vector<int> inner(positions.begin() + 1, positions.begin() + m);
    std::vector<int> outer(positions.begin() + m + 1, positions.end());
    SurdScalar in = pair_sum(g, edges, inner);
    if (in.is_zero()) continue;
    SurdScalar out = pair_sum(g, edges, outer);
    if (out.is_zero()) continue;
    total += SurdScalar::sqrt_of(g.edge(edges[first]).weight) * in * out;
  }
  return total;
}

}  // namespace

SurdScalar expectation_coefficient(const WeightedGraph& g,
                                   const std::vector<int>& edges) {
  if (edges.size() > kMaxMomentLength)
    throw MomentBudgetError("word longer than " + std::to_string(kMaxMomentLength));
  if (edges.empty()) return SurdScalar(Rational(1));
  if (edges.size() % 2) return SurdScalar();
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (g.edge(edges[i]).dst != g.edge(edges[i + 1]).src) return SurdScalar();
  if (g.edge(edges.back()).dst != g.edge(edges.front()).src) return SurdScalar();
  std::vector<int> positions(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) positions[i] = static_cast<int>(i);
  return pair_sum(g, edges, positions);
}

SurdScalar expectation_coefficient(const WeightedGraph& g, const Word& w) {
  auto nw = normalize_word(g, w);
  return nw.prefactor * expectation_coefficient(g, nw.edges);
}

SurdScalar phi_moment(const WeightedGraph& g, const TracialData& td, const Word& w) {
  if (w.empty())
    throw std::invalid_argument("phi_moment: empty word (use the vertex state)");
  auto nw = normalize_word(g, w);
  SurdScalar coeff = expectation_coefficient(g, nw.edges);
  return SurdScalar(td.state[g.edge(nw.edges.front()).src]) * nw.prefactor * coeff;
}

EigenCheck check_eigen_identity(const WeightedGraph& g, const TracialData& td,
                                int edge, const Word& w) {
  EigenCheck out;
  Word left{WordLetter{edge, false}};
  left.insert(left.end(), w.begin(), w.end());
  Word right = w;
  right.push_back({edge, false});
  out.lhs = phi_moment(g, td, left);
  out.rhs = phi_moment(g, td, right);
  out.eigenvalue = edge_eigenvalue(g, td, edge);
  out.holds = out.lhs == SurdScalar(out.eigenvalue) * out.rhs;
  return out;
}

std::vector<std::vector<SurdScalar>> gram_matrix(const WeightedGraph& g,
                                                 const TracialData& td,
                                                 const std::vector<Word>& words,
                                                 int v) {
  for (auto& w : words) {
    if (w.empty()) continue;  // empty word acts as the projection at v
    auto nw = normalize_word(g, w);
    Path p = compose(g, nw.edges);
    if (!p.is_loop() || p.src != v)
      throw VertexMismatchError("gram_matrix: word is not a loop at " +
                                g.vertex_name(v));
  }
  const std::size_t n = words.size();
  std::vector<std::vector<SurdScalar>> gram(n, std::vector<SurdScalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Word wi = adjoint_word(words[i]);
    for (std::size_t j = 0; j < n; ++j) {
      Word prod = wi;
      prod.insert(prod.end(), words[j].begin(), words[j].end());
      gram[i][j] = prod.empty() ? SurdScalar(td.state[v]) : phi_moment(g, td, prod);
    }
  }
  return gram;
}

}  // namespace graphvn
