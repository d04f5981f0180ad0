#include "graphvn/fock.hpp"

#include <algorithm>
#include <cmath>

namespace graphvn {

FockBasis FockBasis::build(const WeightedGraph& g, int depth, std::size_t max_entries) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  FockBasis b;
  b.depth_ = depth;
  for (int v = 0; v < g.vertex_count(); ++v)
    b.elements_.push_back({v, {}});
  std::size_t level_begin = 0, level_end = b.elements_.size();
  for (int d = 1; d <= depth; ++d) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      // Copy: push_back below may reallocate the element storage.
      const Element el = b.elements_[i];
      // Extend on the left: creation prepends, so grow paths at the source.
      for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).dst != el.vertex) continue;
        Element next;
        next.vertex = g.edge(e).src;
        next.edges.reserve(el.edges.size() + 1);
        next.edges.push_back(e);
        next.edges.insert(next.edges.end(), el.edges.begin(), el.edges.end());
        b.elements_.push_back(std::move(next));
        if (b.elements_.size() > max_entries)
          throw BasisTooLargeError("path basis exceeds " + std::to_string(max_entries) +
                                   " entries at depth " + std::to_string(d));
      }
    }
    level_begin = level_end;
    level_end = b.elements_.size();
  }
  for (std::size_t i = 0; i < b.elements_.size(); ++i)
    if (!b.elements_[i].edges.empty()) b.index_.emplace(b.elements_[i].edges, i);
  return b;
}

std::size_t FockBasis::find(const std::vector<int>& edges) const {
  auto it = index_.find(edges);
  return it == index_.end() ? npos : it->second;
}

std::vector<double> SparseOperator::apply(const std::vector<double>& x) const {
  std::vector<double> y(dim, 0.0);
  for (auto& t : entries) y[t.row] += t.value * x[t.col];
  return y;
}

SparseOperator multiply(const SparseOperator& a, const SparseOperator& b) {
  std::map<std::pair<std::size_t, std::size_t>, double> acc;
  std::map<std::size_t, std::vector<const SparseOperator::Entry*>> b_by_row;
  for (auto& t : b.entries) b_by_row[t.row].push_back(&t);
  for (auto& ta : a.entries) {
    auto it = b_by_row.find(ta.col);
    if (it == b_by_row.end()) continue;
    for (auto* tb : it->second) acc[{ta.row, tb->col}] += ta.value * tb->value;
  }
  SparseOperator out;
  out.dim = a.dim;
  for (auto& [rc, v] : acc)
    if (v != 0.0) out.entries.push_back({rc.first, rc.second, v});
  return out;
}

double max_entry_difference(const SparseOperator& a, const SparseOperator& b) {
  std::map<std::pair<std::size_t, std::size_t>, double> acc;
  for (auto& t : a.entries) acc[{t.row, t.col}] += t.value;
  for (auto& t : b.entries) acc[{t.row, t.col}] -= t.value;
  double m = 0;
  for (auto& [rc, v] : acc) m = std::max(m, std::fabs(v));
  return m;
}

SparseOperator creation_operator(const WeightedGraph& g, const FockBasis& b, int e) {
  SparseOperator op;
  op.dim = b.size();
  const Edge& ed = g.edge(e);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& el = b.element(i);
    if (el.edges.empty()) {
      if (el.vertex != ed.dst) continue;  // l(e) p_v = [v == target] e
    } else if (g.edge(el.edges.front()).src != ed.dst) {
      continue;  // tensor collapses unless target(e) == source(path)
    }
    if (static_cast<int>(el.edges.size()) + 1 > b.depth()) continue;  // truncated
    std::vector<int> longer;
    longer.reserve(el.edges.size() + 1);
    longer.push_back(e);
    longer.insert(longer.end(), el.edges.begin(), el.edges.end());
    std::size_t j = b.find(longer);
    if (j != FockBasis::npos) op.entries.push_back({j, i, 1.0});
  }
  return op;
}

SparseOperator annihilation_operator(const WeightedGraph& g, const FockBasis& b, int e) {
  SparseOperator op;
  op.dim = b.size();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& el = b.element(i);
    if (el.edges.empty() || el.edges.front() != e) continue;
    std::size_t j;
    if (el.edges.size() == 1) {
      j = b.vertex_state(g.edge(e).dst);  // <e|e>_A = p_{target(e)}
    } else {
      std::vector<int> shorter(el.edges.begin() + 1, el.edges.end());
      j = b.find(shorter);
    }
    if (j != FockBasis::npos) op.entries.push_back({j, i, 1.0});
  }
  return op;
}

SparseOperator vertex_projection(const WeightedGraph&, const FockBasis& b, int v) {
  SparseOperator op;
  op.dim = b.size();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& el = b.element(i);
    if (el.vertex == v) op.entries.push_back({i, i, 1.0});
  }
  return op;
}

SparseOperator y_operator(const WeightedGraph& g, const FockBasis& b, int e) {
  SparseOperator cr = creation_operator(g, b, e);
  SparseOperator an = annihilation_operator(g, b, g.edge(e).op);
  double root = std::sqrt(to_double(g.edge(e).weight));
  SparseOperator out;
  out.dim = b.size();
  out.entries = std::move(cr.entries);
  for (auto& t : an.entries) out.entries.push_back({t.row, t.col, root * t.value});
  return out;
}

double vacuum_expectation(const WeightedGraph& g, const FockBasis& b,
                          const std::vector<int>& word, int v) {
  if (static_cast<int>(word.size()) > b.depth())
    throw WordExceedsDepthError("word length " + std::to_string(word.size()) +
                                " exceeds basis depth " + std::to_string(b.depth()));
  std::vector<double> vec(b.size(), 0.0);
  vec[b.vertex_state(v)] = 1.0;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    vec = y_operator(g, b, *it).apply(vec);
  return vec[b.vertex_state(v)];
}

CrossCheck cross_validate(const WeightedGraph& g, const TracialData& td,
                          const std::vector<std::vector<int>>& words, int depth,
                          double tol, const WeightedGraph* fock_graph,
                          std::size_t max_entries) {
  const WeightedGraph& fg = fock_graph ? *fock_graph : g;
  FockBasis basis = FockBasis::build(fg, depth, max_entries);
  std::map<int, SparseOperator> ops;
  for (auto& word : words)
    for (int e : word)
      if (!ops.count(e)) ops.emplace(e, y_operator(fg, basis, e));
  CrossCheck out;
  for (auto& word : words) {
    CrossCheck::Item item;
    item.word = edge_ids(g, word);
    if (static_cast<int>(word.size()) > depth)
      throw WordExceedsDepthError("word longer than the basis depth");
    SurdScalar exact = expectation_coefficient(g, word);
    int src = word.empty() ? td.base : g.edge(word.front()).src;
    item.series = to_double(td.state[src]) * exact.to_double();
    std::vector<double> vec(basis.size(), 0.0);
    vec[basis.vertex_state(src)] = 1.0;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      vec = ops.at(*it).apply(vec);
    item.simulated = to_double(td.state[src]) * vec[basis.vertex_state(src)];
    item.deviation = std::fabs(item.series - item.simulated);
    out.max_deviation = std::max(out.max_deviation, item.deviation);
    if (item.deviation > tol) out.ok = false;
    out.items.push_back(std::move(item));
  }
  return out;
}

}  // namespace graphvn
