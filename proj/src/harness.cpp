#include "graphvn/harness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace graphvn {

namespace {

const std::vector<Rational>& weight_pool() {
  static const std::vector<Rational> pool = {
      Rational(1),    Rational(2),    Rational(3),    Rational(4),
      Rational(5),    Rational(6),    Rational(1, 2), Rational(1, 3),
      Rational(1, 4), Rational(1, 6), Rational(3, 2), Rational(2, 3),
      Rational(5, 2), Rational(2, 5), Rational(9, 4), Rational(4, 9),
      Rational(10, 3)};
  return pool;
}

std::string vname(int i) { return "v" + std::to_string(i); }

}  // namespace

Rational random_weight(Rng& rng) {
  const auto& pool = weight_pool();
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

Rational random_weight_above_1(Rng& rng) {
  Rational w = random_weight(rng);
  while (w <= 1) w = random_weight(rng);
  return w;
}

WeightedGraph random_connected_graph(Rng& rng, int max_vertices, int extra_pairs) {
  int nv = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  std::vector<std::string> vertices;
  for (int i = 0; i < nv; ++i) vertices.push_back(vname(i));
  json doc;
  doc["vertices"] = vertices;
  doc["edges"] = json::array();
  int eid = 0;
  auto add_edge = [&](int s, int t, const Rational& w, bool self_paired = false) {
    json e;
    e["id"] = "e" + std::to_string(eid++);
    e["source"] = vname(s);
    e["target"] = vname(t);
    e["weight"] = fraction_string(self_paired ? Rational(1) : w);
    if (self_paired) e["self_paired"] = true;
    doc["edges"].push_back(e);
  };
  for (int v = 1; v < nv; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    add_edge(parent, v, random_weight(rng));
  }
  int chords = std::uniform_int_distribution<int>(0, extra_pairs)(rng);
  for (int i = 0; i < chords; ++i) {
    int s = std::uniform_int_distribution<int>(0, nv - 1)(rng);
    int t = std::uniform_int_distribution<int>(0, nv - 1)(rng);
    if (s == t && std::uniform_int_distribution<int>(0, 4)(rng) == 0) {
      add_edge(s, t, Rational(1), /*self_paired=*/true);
    } else {
      add_edge(s, t, random_weight(rng));
    }
  }
  return WeightedGraph::from_json(doc);
}

namespace {

WeightedGraph build(const std::vector<std::string>& vertices, const json& edges) {
  json doc;
  doc["vertices"] = vertices;
  doc["edges"] = edges;
  return WeightedGraph::from_json(doc);
}

json edge_spec(const std::string& id, const std::string& s, const std::string& t,
               const Rational& w) {
  return json{{"id", id}, {"source", s}, {"target", t}, {"weight", fraction_string(w)}};
}

}  // namespace

WeightedGraph make_bouquet(const std::vector<Rational>& weights) {
  json edges = json::array();
  for (std::size_t i = 0; i < weights.size(); ++i)
    edges.push_back(edge_spec("e" + std::to_string(i + 1), "0", "0", weights[i]));
  return build({"0"}, edges);
}

WeightedGraph make_two_cycle(const Rational& w1, const Rational& w2) {
  json edges = json::array();
  edges.push_back(edge_spec("e1", "0", "1", w1));
  edges.push_back(edge_spec("e2", "1", "0", w2));
  return build({"0", "1"}, edges);
}

WeightedGraph make_parallel(const std::vector<Rational>& weights) {
  json edges = json::array();
  for (std::size_t i = 0; i < weights.size(); ++i)
    edges.push_back(edge_spec("e" + std::to_string(i + 1), "0", "1", weights[i]));
  return build({"0", "1"}, edges);
}

WeightedGraph make_cycle(const std::vector<Rational>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
  json edges = json::array();
  for (int i = 0; i < n; ++i)
    edges.push_back(edge_spec("e" + std::to_string(i + 1), std::to_string(i),
                              std::to_string((i + 1) % n), weights[i]));
  return build(vertices, edges);
}

std::vector<int> random_word(Rng& rng, const WeightedGraph& g, int max_len) {
  int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::vector<int> word;
  std::uniform_int_distribution<int> pick(0, g.edge_count() - 1);
  for (int i = 0; i < len; ++i) word.push_back(pick(rng));
  return word;
}

std::vector<int> random_loop(Rng& rng, const WeightedGraph& g, int len) {
  std::uniform_int_distribution<int> vpick(0, g.vertex_count() - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    int v = vpick(rng);
    std::vector<int> word;
    int at = v;
    bool stuck = false;
    for (int i = 0; i < len; ++i) {
      const auto& outs = g.out_edges(at);
      if (outs.empty()) {
        stuck = true;
        break;
      }
      int e = outs[std::uniform_int_distribution<std::size_t>(0, outs.size() - 1)(rng)];
      word.push_back(e);
      at = g.edge(e).dst;
    }
    if (!stuck && at == v) return word;
  }
  return {};
}

std::vector<std::vector<int>> loops_at(const WeightedGraph& g, int v, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  std::function<void(int, int)> walk = [&](int at, int remaining) {
    if (remaining == 0) {
      if (at == v) out.push_back(word);
      return;
    }
    for (int e : g.out_edges(at)) {
      word.push_back(e);
      walk(g.edge(e).dst, remaining - 1);
      word.pop_back();
    }
  };
  walk(v, len);
  return out;
}

WeightedGraph relabel_graph(const WeightedGraph& g, Rng& rng) {
  const int nv = g.vertex_count();
  std::vector<int> vperm(nv), eperm(g.edge_count());
  std::iota(vperm.begin(), vperm.end(), 0);
  std::iota(eperm.begin(), eperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::shuffle(eperm.begin(), eperm.end(), rng);
  auto new_vname = [&](int v) { return "r" + std::to_string(vperm[v]); };
  json doc;
  doc["vertices"] = json::array();
  for (int v = 0; v < nv; ++v) doc["vertices"].push_back(new_vname(v));
  if (g.base_hint()) {
    int b = g.vertex_index(*g.base_hint());
    if (b >= 0) doc["base"] = new_vname(b);
  }
  doc["edges"] = json::array();
  for (int e : g.pair_representatives()) {
    const Edge& ed = g.edge(e);
    json spec;
    spec["id"] = "g" + std::to_string(eperm[e]);
    spec["source"] = new_vname(ed.src);
    spec["target"] = new_vname(ed.dst);
    spec["weight"] = fraction_string(ed.weight);
    if (ed.self_paired) spec["self_paired"] = true;
    doc["edges"].push_back(spec);
  }
  return WeightedGraph::from_json(doc);
}

WeightedGraph reverse_orientation(const WeightedGraph& g) {
  json doc;
  doc["vertices"] = g.vertices();
  if (g.base_hint()) doc["base"] = *g.base_hint();
  doc["edges"] = json::array();
  for (int e : g.pair_representatives()) {
    const Edge& ed = g.edge(e);
    json spec;
    spec["id"] = ed.id;
    if (ed.self_paired) {
      spec["source"] = g.vertex_name(ed.src);
      spec["target"] = g.vertex_name(ed.dst);
      spec["weight"] = fraction_string(ed.weight);
      spec["self_paired"] = true;
    } else {
      spec["source"] = g.vertex_name(ed.dst);
      spec["target"] = g.vertex_name(ed.src);
      spec["weight"] = fraction_string(Rational(1) / ed.weight);
    }
    doc["edges"].push_back(spec);
  }
  return WeightedGraph::from_json(doc);
}

std::vector<std::vector<int>> all_spanning_trees(const WeightedGraph& g) {
  auto reps = g.pair_representatives();
  // Self-loops never belong to a tree.
  reps.erase(std::remove_if(reps.begin(), reps.end(),
                            [&](int e) { return g.edge(e).src == g.edge(e).dst; }),
             reps.end());
  const int need = g.vertex_count() - 1;
  std::vector<std::vector<int>> trees;
  if (need == 0) {
    trees.push_back({});
    return trees;
  }
  if (static_cast<int>(reps.size()) < need) return trees;
  std::vector<int> pick(need);
  std::iota(pick.begin(), pick.end(), 0);
  auto connected = [&](const std::vector<int>& chosen) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int merges = 0;
    for (int idx : chosen) {
      int a = find(g.edge(reps[idx]).src), b = find(g.edge(reps[idx]).dst);
      if (a == b) return false;  // cycle within the candidate tree
      parent[a] = b;
      ++merges;
    }
    return merges == need;
  };
  while (true) {
    if (connected(pick)) {
      std::vector<int> tree;
      for (int idx : pick) tree.push_back(reps[idx]);
      trees.push_back(tree);
    }
    // Next combination.
    int i = need - 1;
    while (i >= 0 && pick[i] == static_cast<int>(reps.size()) - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return trees;
}

}  // namespace graphvn
