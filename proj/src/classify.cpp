#include "graphvn/classify.hpp"

#include <algorithm>

namespace graphvn {

std::size_t rotate_loop(const std::vector<Rational>& weights) {
  if (weights.empty()) throw std::invalid_argument("rotate_loop: empty weights");
  const std::size_t n = weights.size();
  Rational total = 1;
  for (auto& w : weights) total *= w;
  if (total < 1) throw std::invalid_argument("rotate_loop: product below 1");
  // Minimal product over contiguous cyclic runs; first found wins ties.
  Rational alpha = 1;
  std::size_t alpha_end = 0;
  bool found = false;
  for (std::size_t end = 0; end < n; ++end) {
    Rational run = 1;
    for (std::size_t len = 1; len <= n; ++len) {
      run *= weights[(end + n - len + 1) % n];
      if (!found || run < alpha) {
        alpha = run;
        alpha_end = end;
        found = true;
      }
    }
  }
  if (alpha >= 1) return 0;  // every rotation works; keep the given one
  return (alpha_end + 1) % n;
}

bool rotation_valid(const std::vector<Rational>& weights, std::size_t k) {
  Rational prefix = 1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    prefix *= weights[(k + i) % weights.size()];
    if (prefix < 1) return false;
  }
  return true;
}

std::optional<Path> select_base_loop(const WeightedGraph& g) {
  int cap = std::max(g.vertex_count(), 2);
  auto loops = simple_loops(g, cap);  // lexicographic by edge ids
  std::size_t best_len = 0;
  for (auto& p : loops)
    if (p.weight != 1 && (best_len == 0 || p.edges.size() < best_len))
      best_len = p.edges.size();
  if (best_len == 0) return std::nullopt;

  std::optional<Path> best;
  std::vector<std::string> best_key;
  for (auto& p : loops) {
    if (p.weight == 1 || p.edges.size() != best_len) continue;
    Path candidate = p.weight < 1 ? reverse_path(g, p) : p;
    std::vector<Rational> ws;
    for (int e : candidate.edges) ws.push_back(g.edge(e).weight);
    candidate = rotate_path(g, candidate, rotate_loop(ws));
    auto key = edge_ids(g, candidate.edges);
    if (!best || key < best_key) {
      best = candidate;
      best_key = key;
    }
  }
  return best;
}

Rational atom_mass(const WeightedGraph& g, const TracialData& td, int v) {
  Rational deficiency = Rational(1) - g.out_weight_sum(v);
  if (deficiency <= 0) return 0;
  return td.state[v] * deficiency;
}

namespace {

std::vector<Atom> collect_atoms(const WeightedGraph& g, const TracialData& td) {
  std::vector<Atom> atoms;
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rational deficiency = Rational(1) - g.out_weight_sum(v);
    if (deficiency > 0) atoms.push_back({v, atom_mass(g, td, v), deficiency});
  }
  return atoms;
}

}  // namespace

IsoClassReport classify(const WeightedGraph& g, const ClassifyOptions& opts) {
  IsoClassReport rep;
  rep.group = cycle_group(g);

  if (!rep.group.trivial()) {
    rep.base_loop = select_base_loop(g);
    if (!rep.base_loop)
      throw std::logic_error("nontrivial weight group without a weighted loop");
    // State induced by the loop frame: the loop's first n-1 edges become the
    // leading tree edges, so the reported masses match the loop-relative
    // formulas exactly.
    std::vector<int> seed(rep.base_loop->edges.begin(),
                          rep.base_loop->edges.end() - 1);
    rep.td = tracial_subgraph(g, rep.base_loop->src, seed);
  } else {
    rep.td = tracial_subgraph(g, g.resolve_base(opts.base_override));
  }

  rep.state_total = 0;
  for (auto& s : rep.td.state) rep.state_total += s;
  rep.atoms = collect_atoms(g, rep.td);
  Rational atom_mass = 0;
  for (auto& a : rep.atoms) atom_mass += a.mass;
  rep.diffuse.weight = rep.state_total - atom_mass;

  if (!rep.group.trivial()) {
    rep.diffuse.kind = DiffusePart::Kind::FreeArakiWoods;
  } else if (rep.diffuse.weight == 0) {
    rep.diffuse.kind = DiffusePart::Kind::Absent;
  } else {
    rep.diffuse.kind = DiffusePart::Kind::Tracial;
    rep.diffuse.is_factor = true;
    if (g.pair_count() < 2) {
      rep.diffuse.is_factor = false;
      rep.diffuse.factor_reason = "fewer than two edge pairs";
    }
    for (int v = 0; v < g.vertex_count() && rep.diffuse.is_factor; ++v) {
      if (g.out_weight_sum(v) < 1) {
        rep.diffuse.is_factor = false;
        rep.diffuse.factor_reason =
            "out-weight sum below 1 at vertex " + g.vertex_name(v);
      }
    }
    if (rep.diffuse.is_factor) rep.diffuse.factor_reason = "factor";
  }

  if (opts.normalize) {
    rep.normalized = true;
    Rational total = rep.state_total;
    for (auto& a : rep.atoms) a.mass /= total;
    rep.diffuse.weight /= total;
    rep.state_total = 1;
  }
  return rep;
}

json IsoClassReport::to_json(const WeightedGraph& g) const {
  json doc;
  doc["schema"] = "graphvn-report/1";
  doc["group"] = group.to_json();
  doc["state_total"] = fraction_string(state_total);
  json diff;
  switch (diffuse.kind) {
    case DiffusePart::Kind::FreeArakiWoods: {
      diff["kind"] = "free_araki_woods";
      diff["generators"] = json::array();
      for (auto& q : group.generators())
        diff["generators"].push_back(fraction_string(q));
      diff["weight"] = fraction_string(diffuse.weight);
      break;
    }
    case DiffusePart::Kind::Tracial: {
      diff["kind"] = "tracial";
      diff["is_factor"] = diffuse.is_factor;
      diff["reason"] = diffuse.factor_reason;
      diff["free_group_parameter"] = "unspecified (see prior work)";
      diff["weight"] = fraction_string(diffuse.weight);
      break;
    }
    case DiffusePart::Kind::Absent:
      diff["kind"] = "absent";
      break;
  }
  doc["diffuse"] = diff;
  doc["atoms"] = json::array();
  for (auto& a : atoms) {
    json atom;
    atom["vertex"] = g.vertex_name(a.vertex);
    atom["mass"] = fraction_string(a.mass);
    atom["deficiency"] = fraction_string(a.deficiency);
    doc["atoms"].push_back(atom);
  }
  if (base_loop) {
    json loop;
    loop["edges"] = edge_ids(g, base_loop->edges);
    loop["base"] = g.vertex_name(base_loop->src);
    loop["weight"] = fraction_string(base_loop->weight);
    doc["base_loop"] = loop;
  } else {
    doc["base_loop"] = nullptr;
  }
  doc["state"] = json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    doc["state"][g.vertex_name(v)] = fraction_string(td.state[v]);
  doc["tracial_subgraph"] = tracial_data_json(g, td);
  doc["normalized"] = normalized;
  return doc;
}

Rational fdim_amplify(const Rational& t, const Rational& gamma) {
  if (gamma == 0) throw std::invalid_argument("fdim_amplify: gamma must be nonzero");
  return 1 + (t - 1) / (gamma * gamma);
}

Rational fdim_complement_atomic(const Rational& t, const Rational& a,
                                const Rational& b) {
  if (b == 0) throw std::invalid_argument("fdim_complement_atomic: b must be nonzero");
  return (t * (a + b) * (a + b) - 4 * a * b) / (b * b);
}

Rational fdim_complement_diffuse(const Rational& t, const Rational& a,
                                 const Rational& b) {
  if (b == 0) throw std::invalid_argument("fdim_complement_diffuse: b must be nonzero");
  return (t + 2 * (a * a + b * b - 1)) / (b * b);
}

}  // namespace graphvn
