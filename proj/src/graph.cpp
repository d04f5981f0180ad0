#include "graphvn/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace graphvn {

WeightedGraph::WeightedGraph(std::vector<std::string> vertices,
                             std::vector<Edge> edges,
                             std::optional<std::string> base)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), base_(std::move(base)) {
  index();
}

void WeightedGraph::index() {
  // Canonical storage order: sort by id, remap indices.
  std::vector<int> vperm(vertices_.size()), eperm(edges_.size());
  for (std::size_t i = 0; i < vperm.size(); ++i) vperm[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < eperm.size(); ++i) eperm[i] = static_cast<int>(i);
  std::sort(vperm.begin(), vperm.end(),
            [&](int a, int b) { return vertices_[a] < vertices_[b]; });
  std::sort(eperm.begin(), eperm.end(),
            [&](int a, int b) { return edges_[a].id < edges_[b].id; });
  std::vector<int> vinv(vperm.size()), einv(eperm.size());
  for (std::size_t i = 0; i < vperm.size(); ++i) vinv[vperm[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < eperm.size(); ++i) einv[eperm[i]] = static_cast<int>(i);

  std::vector<std::string> vs(vertices_.size());
  for (std::size_t i = 0; i < vperm.size(); ++i) vs[i] = vertices_[vperm[i]];
  std::vector<Edge> es(edges_.size());
  for (std::size_t i = 0; i < eperm.size(); ++i) {
    Edge e = edges_[eperm[i]];
    if (e.src >= 0 && e.src < static_cast<int>(vinv.size())) e.src = vinv[e.src];
    if (e.dst >= 0 && e.dst < static_cast<int>(vinv.size())) e.dst = vinv[e.dst];
    if (e.op >= 0 && e.op < static_cast<int>(einv.size())) e.op = einv[e.op];
    es[i] = std::move(e);
  }
  vertices_ = std::move(vs);
  edges_ = std::move(es);

  vindex_.clear();
  eindex_.clear();
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    vindex_.emplace(vertices_[i], static_cast<int>(i));
  for (std::size_t i = 0; i < edges_.size(); ++i)
    eindex_.emplace(edges_[i].id, static_cast<int>(i));
  out_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.src >= 0 && e.src < vertex_count()) out_[e.src].push_back(static_cast<int>(i));
  }
}

WeightedGraph WeightedGraph::from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  WeightedGraph g;
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("missing \"vertices\" array");
  for (auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex names must be strings");
    g.vertices_.push_back(v.get<std::string>());
  }
  if (doc.contains("base")) {
    if (!doc["base"].is_string()) throw ParseError("\"base\" must be a string");
    g.base_ = doc["base"].get<std::string>();
  }
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("missing \"edges\" array");
  std::map<std::string, int> vidx;
  for (std::size_t i = 0; i < g.vertices_.size(); ++i)
    vidx.emplace(g.vertices_[i], static_cast<int>(i));
  for (auto& spec : doc["edges"]) {
    if (!spec.is_object()) throw ParseError("edge entries must be objects");
    for (const char* key : {"id", "source", "target", "weight"})
      if (!spec.contains(key) || !spec[key].is_string())
        throw ParseError(std::string("edge entry needs string field \"") + key + "\"");
    Edge e;
    e.id = spec["id"].get<std::string>();
    auto s = vidx.find(spec["source"].get<std::string>());
    auto t = vidx.find(spec["target"].get<std::string>());
    e.src = s == vidx.end() ? -1 : s->second;
    e.dst = t == vidx.end() ? -1 : t->second;
    e.weight = parse_weight(spec["weight"].get<std::string>());
    e.self_paired = spec.value("self_paired", false);
    int idx = static_cast<int>(g.edges_.size());
    if (e.self_paired) {
      e.op = idx;
      g.edges_.push_back(e);
    } else {
      Edge rev;
      rev.id = e.id + "^op";
      rev.src = e.dst;
      rev.dst = e.src;
      rev.weight = Rational(1) / e.weight;
      rev.op = idx;
      e.op = idx + 1;
      g.edges_.push_back(e);
      g.edges_.push_back(rev);
    }
  }
  g.index();
  return g;
}

WeightedGraph WeightedGraph::from_string(const std::string& text) {
  json doc = json::parse(text, nullptr, true, /*ignore_comments=*/false);
  return from_json(doc);
}

WeightedGraph WeightedGraph::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

json WeightedGraph::to_json() const {
  json doc;
  doc["vertices"] = json::array();
  for (auto& v : vertices_) doc["vertices"].push_back(v);
  if (base_) doc["base"] = *base_;
  doc["edges"] = json::array();
  for (auto i : pair_representatives()) {
    const Edge& e = edges_[i];
    json spec;
    spec["id"] = e.id;
    spec["source"] = vertices_.at(e.src);
    spec["target"] = vertices_.at(e.dst);
    spec["weight"] = fraction_string(e.weight);
    if (e.self_paired) spec["self_paired"] = true;
    doc["edges"].push_back(spec);
  }
  return doc;
}

std::vector<Violation> WeightedGraph::validate() const {
  std::vector<Violation> out;
  auto flag = [&](std::string code, std::string msg, std::string where = "") {
    out.push_back({std::move(code), std::move(msg), std::move(where)});
  };
  if (vertices_.empty()) flag("empty", "graph has no vertices");
  {
    std::set<std::string> seen;
    for (auto& v : vertices_)
      if (!seen.insert(v).second) flag("vertex-dup", "duplicate vertex id", v);
    seen.clear();
    for (auto& e : edges_)
      if (!seen.insert(e.id).second) flag("edge-dup", "duplicate edge id", e.id);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.src < 0 || e.src >= vertex_count() || e.dst < 0 || e.dst >= vertex_count()) {
      flag("endpoint", "edge endpoint is not a known vertex", e.id);
      continue;
    }
    if (e.weight <= 0) flag("weight-sign", "edge weight must be positive", e.id);
    if (e.op < 0 || e.op >= edge_count()) {
      flag("op-missing", "edge has no paired reverse edge", e.id);
      continue;
    }
    const Edge& r = edges_[e.op];
    if (r.op != static_cast<int>(i))
      flag("op-involution", "edge pairing is not an involution", e.id);
    if (r.src != e.dst || r.dst != e.src)
      flag("op-endpoints", "paired edge must swap source and target", e.id);
    if (e.weight > 0 && r.weight != Rational(1) / e.weight)
      flag("op-weight", "paired edge weight must be the exact inverse", e.id);
    if (e.self_paired) {
      if (e.op != static_cast<int>(i))
        flag("self-pair", "self-paired edge must be its own reverse", e.id);
      if (e.src != e.dst)
        flag("self-pair-loop", "self-paired edge must be a self-loop", e.id);
      if (e.weight != 1)
        flag("self-pair-weight", "self-paired edge must have weight 1", e.id);
    } else if (e.op == static_cast<int>(i)) {
      flag("self-pair", "edge pairs with itself but is not marked self-paired", e.id);
    }
  }
  if (!vertices_.empty()) {
    // Connectivity of the underlying undirected graph.
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto& e : edges_) {
        if (e.src < 0 || e.dst < 0 || e.src >= vertex_count() || e.dst >= vertex_count())
          continue;
        int other = -1;
        if (e.src == v) other = e.dst;
        if (e.dst == v) other = e.src;
        if (other >= 0 && !seen[other]) {
          seen[other] = 1;
          stack.push_back(other);
        }
      }
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) flag("disconnected", "vertex unreachable from the rest", vertices_[i]);
  }
  if (base_ && vindex_.find(*base_) == vindex_.end())
    flag("base", "declared base is not a vertex", *base_);
  return out;
}

int WeightedGraph::vertex_index(const std::string& name) const {
  auto it = vindex_.find(name);
  return it == vindex_.end() ? -1 : it->second;
}

int WeightedGraph::edge_index(const std::string& id) const {
  auto it = eindex_.find(id);
  return it == eindex_.end() ? -1 : it->second;
}

int WeightedGraph::require_edge(const std::string& id) const {
  int i = edge_index(id);
  if (i < 0) throw UnknownEdgeError("unknown edge '" + id + "'");
  return i;
}

int WeightedGraph::resolve_base(const std::optional<std::string>& override_name) const {
  if (vertices_.empty()) throw std::logic_error("empty graph has no base");
  const std::optional<std::string>& pick = override_name ? override_name : base_;
  if (pick) {
    int v = vertex_index(*pick);
    if (v < 0) throw ParseError("base vertex '" + *pick + "' does not exist");
    return v;
  }
  return 0;  // vertices are id-sorted
}

int WeightedGraph::pair_count() const {
  return static_cast<int>(pair_representatives().size());
}

std::vector<int> WeightedGraph::pair_representatives() const {
  std::vector<int> reps;
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[i].op >= i) reps.push_back(i);
  return reps;
}

Rational WeightedGraph::out_weight_sum(int v) const {
  Rational sum = 0;
  for (int e : out_.at(v)) sum += edges_[e].weight;
  return sum;
}

Path compose(const WeightedGraph& g, const std::vector<int>& edges) {
  Path p;
  p.edges = edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = g.edge(edges[i]);
    if (i == 0) {
      p.src = e.src;
    } else if (g.edge(edges[i - 1]).dst != e.src) {
      throw NonComposableError(i);
    }
    p.dst = e.dst;
    p.weight *= e.weight;
  }
  return p;
}

Path compose_ids(const WeightedGraph& g, const std::vector<std::string>& ids) {
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (auto& id : ids) idx.push_back(g.require_edge(id));
  return compose(g, idx);
}

Path reverse_path(const WeightedGraph& g, const Path& p) {
  std::vector<int> rev;
  rev.reserve(p.edges.size());
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it)
    rev.push_back(g.edge(*it).op);
  return compose(g, rev);
}

Path rotate_path(const WeightedGraph& g, const Path& p, std::size_t k) {
  if (!p.is_loop()) throw std::invalid_argument("rotate_path: not a loop");
  std::vector<int> rot(p.edges.begin() + k, p.edges.end());
  rot.insert(rot.end(), p.edges.begin(), p.edges.begin() + k);
  return compose(g, rot);
}

std::vector<std::string> edge_ids(const WeightedGraph& g, const std::vector<int>& edges) {
  std::vector<std::string> ids;
  ids.reserve(edges.size());
  for (int e : edges) ids.push_back(g.edge(e).id);
  return ids;
}

std::vector<Path> simple_loops(const WeightedGraph& g, int max_len) {
  if (max_len < 1) throw std::invalid_argument("simple_loops: max_len must be >= 1");
  std::vector<Path> out;
  std::vector<int> current;
  std::vector<char> visited(g.vertex_count(), 0);

  std::function<void(int, int)> extend = [&](int base, int at) {
    for (int e : g.out_edges(at)) {
      int next = g.edge(e).dst;
      current.push_back(e);
      if (next == base) {
        out.push_back(compose(g, current));
      } else if (!visited[next] && static_cast<int>(current.size()) < max_len) {
        visited[next] = 1;
        extend(base, next);
        visited[next] = 0;
      }
      current.pop_back();
    }
  };

  for (int v = 0; v < g.vertex_count(); ++v) {
    visited.assign(g.vertex_count(), 0);
    visited[v] = 1;
    extend(v, v);
  }
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
    return edge_ids(g, a.edges) < edge_ids(g, b.edges);
  });
  return out;
}

}  // namespace graphvn
