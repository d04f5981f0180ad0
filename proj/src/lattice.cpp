#include "graphvn/lattice.hpp"

#include <algorithm>
#include <deque>

#include "graphvn/factor.hpp"

namespace graphvn {

void hermite_normal_form(std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclidean elimination below row r in column c.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;  // column clear below r
      std::swap(rows[r], rows[best]);
      bool clear = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[r][c];  // truncated: shrinks |entry|
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(rows[i][c], rows[r][c]);
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
}

RationalLattice RationalLattice::from_ratios(const std::vector<Rational>& generators,
                                             const std::vector<Rational>& support) {
  RationalLattice lat;
  std::set<Int> primes;
  const std::vector<Rational>& pool = support.empty() ? generators : support;
  std::vector<std::map<Int, int>> factored;
  factored.reserve(generators.size());
  for (auto& q : pool)
    for (auto& [p, e] : factor_rational(q)) primes.insert(p);
  for (auto& q : generators) {
    factored.push_back(factor_rational(q));
    for (auto& [p, e] : factored.back()) primes.insert(p);
  }
  lat.primes_.assign(primes.begin(), primes.end());
  std::vector<std::vector<Int>> rows;
  for (auto& f : factored) {
    std::vector<Int> row(lat.primes_.size(), 0);
    for (auto& [p, e] : f) {
      auto it = std::lower_bound(lat.primes_.begin(), lat.primes_.end(), p);
      row[static_cast<std::size_t>(it - lat.primes_.begin())] = e;
    }
    rows.push_back(std::move(row));
  }
  hermite_normal_form(rows);
  lat.basis_ = std::move(rows);
  return lat;
}

std::vector<Rational> RationalLattice::generators() const {
  std::vector<Rational> out;
  for (auto& row : basis_) {
    Rational g = 1;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] > 0)
        for (Int k = 0; k < row[j]; ++k) g *= primes_[j];
      else
        for (Int k = 0; k > row[j]; --k) g /= primes_[j];
    }
    out.push_back(g);
  }
  return out;
}

bool RationalLattice::contains(const Rational& x) const {
  if (x <= 0) throw std::invalid_argument("contains: argument must be > 0");
  std::vector<Int> v(primes_.size(), 0);
  for (auto& [p, e] : factor_rational(x)) {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return false;  // prime outside support
    v[static_cast<std::size_t>(it - primes_.begin())] = e;
  }
  // Back-substitution against the echelon basis.
  std::size_t row = 0;
  for (std::size_t c = 0; c < v.size(); ++c) {
    Int pivot = 0;
    if (row < basis_.size()) {
      // Pivot column of `row` is the first nonzero entry.
      std::size_t pc = 0;
      while (pc < basis_[row].size() && basis_[row][pc] == 0) ++pc;
      if (pc == c) pivot = basis_[row][pc];
    }
    if (pivot != 0) {
      if (v[c] % pivot != 0) return false;
      Int q = v[c] / pivot;
      if (q != 0)
        for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * basis_[row][j];
      ++row;
    } else if (v[c] != 0) {
      return false;
    }
  }
  return true;
}

json RationalLattice::to_json() const {
  json doc;
  doc["rank"] = rank();
  doc["generators"] = json::array();
  for (auto& g : generators()) doc["generators"].push_back(fraction_string(g));
  return doc;
}

std::vector<int> spanning_tree(const WeightedGraph& g, int base) {
  std::vector<int> tree;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<int> queue{base};
  seen[base] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : g.out_edges(v)) {  // id-sorted
      int w = g.edge(e).dst;
      if (!seen[w]) {
        seen[w] = 1;
        tree.push_back(e);
        queue.push_back(w);
      }
    }
  }
  return tree;
}

namespace {

// state(v) = weight of the tree path base -> v. Requires the tree to span.
std::vector<Rational> tree_potentials(const WeightedGraph& g,
                                      const std::vector<int>& tree, int base) {
  std::vector<Rational> state(g.vertex_count(), 0);
  state[base] = 1;
  std::vector<char> placed(g.vertex_count(), 0);
  placed[base] = 1;
  bool progress = true;
  std::size_t remaining = tree.size();
  while (progress && remaining > 0) {
    progress = false;
    for (int e : tree) {
      const Edge& ed = g.edge(e);
      if (placed[ed.src] && !placed[ed.dst]) {
        state[ed.dst] = state[ed.src] * ed.weight;
        placed[ed.dst] = 1;
        --remaining;
        progress = true;
      } else if (placed[ed.dst] && !placed[ed.src]) {
        state[ed.src] = state[ed.dst] / ed.weight;
        placed[ed.src] = 1;
        --remaining;
        progress = true;
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!placed[v]) throw std::invalid_argument("tree does not span the graph");
  return state;
}

}  // namespace

std::vector<Rational> fundamental_cycle_ratios(const WeightedGraph& g,
                                               const std::vector<int>& tree) {
  int base = g.vertex_count() ? 0 : -1;
  if (!tree.empty()) base = g.edge(tree.front()).src;
  auto pot = tree_potentials(g, tree, base < 0 ? 0 : base);
  std::set<int> in_tree;
  for (int e : tree) {
    in_tree.insert(e);
    in_tree.insert(g.edge(e).op);
  }
  std::vector<Rational> out;
  for (int rep : g.pair_representatives()) {
    if (in_tree.count(rep)) continue;
    const Edge& e = g.edge(rep);
    // Chord followed by the tree path target -> source.
    out.push_back(e.weight * pot[e.src] / pot[e.dst]);
  }
  return out;
}

RationalLattice cycle_group(const WeightedGraph& g) {
  return cycle_group_with_tree(g, spanning_tree(g, 0));
}

RationalLattice cycle_group_with_tree(const WeightedGraph& g,
                                      const std::vector<int>& tree) {
  std::vector<Rational> support;
  for (auto& e : g.edges()) support.push_back(e.weight);
  return RationalLattice::from_ratios(fundamental_cycle_ratios(g, tree), support);
}

TracialData tracial_subgraph(const WeightedGraph& g, int base,
                             const std::vector<int>& seed) {
  TracialData td;
  td.base = base;
  td.state.assign(g.vertex_count(), 0);
  td.state[base] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  seen[base] = 1;
  std::deque<int> queue{base};

  int at = base;
  for (int e : seed) {
    const Edge& ed = g.edge(e);
    if (ed.src != at) throw std::invalid_argument("seed is not a path from base");
    if (!seen[ed.dst]) {
      seen[ed.dst] = 1;
      td.state[ed.dst] = td.state[ed.src] * ed.weight;
      td.tree.push_back(e);
      queue.push_back(ed.dst);
    }
    at = ed.dst;
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : g.out_edges(v)) {
      int w = g.edge(e).dst;
      if (!seen[w]) {
        seen[w] = 1;
        td.state[w] = td.state[v] * g.edge(e).weight;
        td.tree.push_back(e);
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) throw std::invalid_argument("graph is not connected");
  // Greedy closure: every edge consistent with the state keeps all loop
  // weights at 1; every excluded edge would create a weight != 1 loop.
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.weight * td.state[ed.src] == td.state[ed.dst]) td.tr_edges.insert(e);
  }
  return td;
}

json tracial_data_json(const WeightedGraph& g, const TracialData& td) {
  json doc;
  doc["base"] = g.vertex_name(td.base);
  doc["tree"] = edge_ids(g, td.tree);
  doc["tr_edges"] = json::array();
  for (int e : td.tr_edges) doc["tr_edges"].push_back(g.edge(e).id);
  doc["state"] = json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    doc["state"][g.vertex_name(v)] = fraction_string(td.state[v]);
  return doc;
}

Rational edge_eigenvalue(const WeightedGraph& g, const TracialData& td, int edge) {
  const Edge& e = g.edge(edge);
  return td.state[e.src] * e.weight / td.state[e.dst];
}

}  // namespace graphvn
