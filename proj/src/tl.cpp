#include "graphvn/tl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace graphvn {

TLDiagram TLDiagram::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  TLDiagram d;
  d.n = n;
  d.partner.assign(2 * n, -1);
  for (auto& [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= 2 * n || j >= 2 * n || i == j)
      throw std::invalid_argument("bad pair");
    d.partner[i] = j;
    d.partner[j] = i;
  }
  for (int i = 0; i < 2 * n; ++i)
    if (d.partner[i] < 0) throw std::invalid_argument("unpaired point");
  for (auto& [i, j] : pairs)
    for (auto& [k, l] : pairs) {
      int a = std::min(i, j), b = std::max(i, j);
      int c = std::min(k, l), e = std::max(k, l);
      if (a < c && c < b && b < e) throw std::invalid_argument("crossing pairs");
    }
  return d;
}

std::vector<std::pair<int, int>> TLDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 2 * n; ++i)
    if (partner[i] > i) out.push_back({i, partner[i]});
  return out;
}

std::string TLDiagram::str() const {
  if (n == 0) return "()";
  std::ostringstream os;
  for (auto& [i, j] : pairs()) os << "(" << i << " " << j << ")";
  return os.str();
}

std::vector<TLDiagram> enumerate_diagrams(int n) {
  std::vector<TLDiagram> out;
  TLDiagram d;
  d.n = n;
  d.partner.assign(2 * n, -1);
  std::function<void(int)> fill = [&](int i) {
    while (i < 2 * n && d.partner[i] >= 0) ++i;
    if (i == 2 * n) {
      out.push_back(d);
      return;
    }
    for (int j = i + 1; j < 2 * n; j += 2) {
      // Non-crossing: everything strictly inside (i, j) must pair within.
      if (d.partner[j] >= 0) continue;
      d.partner[i] = j;
      d.partner[j] = i;
      bool ok = true;
      for (int k = i + 1; k < j && ok; ++k)
        if (d.partner[k] >= 0 && (d.partner[k] < i || d.partner[k] > j)) ok = false;
      if (ok) fill(i + 1);
      d.partner[i] = -1;
      d.partner[j] = -1;
    }
  };
  fill(0);
  return out;
}

TLDiagram tensor(const TLDiagram& a, const TLDiagram& b) {
  TLDiagram out;
  out.n = a.n + b.n;
  out.partner = a.partner;
  for (int p : b.partner) out.partner.push_back(p + 2 * a.n);
  return out;
}

int loop_count(const TLDiagram& x, const TLDiagram& sigma) {
  if (x.n != sigma.n) throw std::invalid_argument("point count mismatch");
  const int m = 2 * x.n;
  std::vector<char> seen(m, 0);
  int cycles = 0;
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    ++cycles;
    int at = s;
    do {
      seen[at] = 1;
      at = x.partner[sigma.partner[at]];
    } while (at != s);
  }
  return cycles / 2;  // each circle is traced once in each direction
}

std::map<int, long> trace_exponents(const TLDiagram& x, TraceNormalization norm) {
  std::map<int, long> out;
  for (auto& sigma : enumerate_diagrams(x.n)) {
    int e = loop_count(x, sigma);
    if (norm == TraceNormalization::PerStrand) e -= x.n;
    ++out[e];
  }
  return out;
}

Rational voiculescu_trace(const TLDiagram& x, const Rational& delta,
                          TraceNormalization norm) {
  Rational total = 0;
  for (auto& [e, count] : trace_exponents(x, norm)) {
    Rational power = 1;
    for (int k = 0; k < std::abs(e); ++k) power *= delta;
    if (e < 0) power = Rational(1) / power;
    total += Rational(count) * power;
  }
  return total;
}

BalanceReport is_balanced(const WeightedGraph& g) {
  BalanceReport rep;
  for (int v = 0; v < g.vertex_count(); ++v)
    rep.vertex_sums.push_back(g.out_weight_sum(v));
  if (rep.vertex_sums.empty()) {
    rep.reason = "empty graph";
    return rep;
  }
  for (auto& s : rep.vertex_sums)
    if (s != rep.vertex_sums.front()) {
      rep.reason = "out-weight sums differ between vertices";
      return rep;
    }
  if (rep.vertex_sums.front() < 2) {
    rep.reason = "common out-weight sum is below 2";
    return rep;
  }
  rep.balanced = true;
  rep.delta = rep.vertex_sums.front();
  return rep;
}

LoopPolynomial inclusion_map(const WeightedGraph& g, int v, const TLDiagram& x,
                             InclusionExponent a) {
  LoopPolynomial out;
  const int m = 2 * x.n;
  if (m == 0) {
    out[{}] = SurdScalar(Rational(1));
    return out;
  }
  std::vector<int> labels(m, -1);
  std::function<void(int, int, SurdScalar)> assign = [&](int i, int at,
                                                         SurdScalar coeff) {
    if (i == m) {
      if (at == v) {
        auto [it, fresh] = out.emplace(labels, coeff);
        if (!fresh) {
          it->second += coeff;
          if (it->second.is_zero()) out.erase(it);
        }
      }
      return;
    }
    if (x.partner[i] < i) {
      // Closing point: the label is forced to the opener's reverse.
      int e = g.edge(labels[x.partner[i]]).op;
      if (g.edge(e).src != at) return;
      labels[i] = e;
      assign(i + 1, g.edge(e).dst, coeff);
      labels[i] = -1;
      return;
    }
    for (int e : g.out_edges(at)) {
      labels[i] = e;
      const Rational& w = g.edge(e).weight;
      SurdScalar factor = a == InclusionExponent::Half
                              ? SurdScalar::sqrt_of(w)
                              : SurdScalar(w);
      assign(i + 1, g.edge(e).dst, coeff * factor);
      labels[i] = -1;
    }
  };
  assign(0, v, SurdScalar(Rational(1)));
  return out;
}

SurdScalar loop_state(const WeightedGraph& g, const LoopPolynomial& p) {
  SurdScalar total;
  for (auto& [word, coeff] : p)
    total += coeff * expectation_coefficient(g, word);
  return total;
}

namespace {

// Loop state of the diagram image at every vertex; nullopt when vertices
// disagree (they never do on balanced graphs, by the bridge identity).
std::optional<SurdScalar> uniform_state(const WeightedGraph& g, const TLDiagram& x,
                                        InclusionExponent a) {
  std::optional<SurdScalar> value;
  for (int v = 0; v < g.vertex_count(); ++v) {
    SurdScalar s = loop_state(g, inclusion_map(g, v, x, a));
    if (!value) {
      value = s;
    } else if (*value != s) {
      return std::nullopt;
    }
  }
  return value;
}

}  // namespace

Calibration calibrate_inclusion(const WeightedGraph& a, const WeightedGraph& b) {
  BalanceReport ba = is_balanced(a), bb = is_balanced(b);
  if (!ba.balanced || !bb.balanced || ba.delta != bb.delta)
    throw DeltaMismatchError("graphs are not balanced with a common delta");
  const Rational delta = ba.delta;
  std::vector<Calibration> survivors;
  for (auto exp : {InclusionExponent::Half, InclusionExponent::One}) {
    for (auto norm : {TraceNormalization::PerStrand, TraceNormalization::Unnormalized}) {
      bool ok = true;
      for (int n = 0; n <= 1 && ok; ++n) {
        for (auto& diagram : enumerate_diagrams(n)) {
          SurdScalar expected(voiculescu_trace(diagram, delta, norm));
          for (const WeightedGraph* g : {&a, &b}) {
            auto got = uniform_state(*g, diagram, exp);
            if (!got || *got != expected) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
      if (ok) survivors.push_back({exp, norm});
    }
  }
  if (survivors.size() != 1)
    throw std::logic_error("calibration did not single out one convention (" +
                           std::to_string(survivors.size()) + " candidates)");
  return survivors.front();
}

InclusionReport verify_inclusion(const WeightedGraph& a, const WeightedGraph& b,
                                 int max_n) {
  if (max_n < 1 || max_n > 4)
    throw std::invalid_argument("verify_inclusion: max_n must be in [1, 4]");
  InclusionReport rep;
  rep.calibration = calibrate_inclusion(a, b);
  rep.delta = is_balanced(a).delta;
  rep.ok = true;

  for (int n = 0; n <= max_n; ++n) {
    for (auto& diagram : enumerate_diagrams(n)) {
      InclusionReport::DiagramCheck check;
      check.diagram = diagram.str();
      auto va = uniform_state(a, diagram, rep.calibration.exponent);
      auto vb = uniform_state(b, diagram, rep.calibration.exponent);
      SurdScalar trace(voiculescu_trace(diagram, rep.delta, rep.calibration.normalization));
      check.graph_independent = va && vb && *va == *vb;
      check.matches_trace = check.graph_independent && *va == trace;
      check.value_a = va ? va->str() : "(vertex-dependent)";
      check.value_b = vb ? vb->str() : "(vertex-dependent)";
      check.trace = trace.str();
      rep.ok = rep.ok && check.graph_independent && check.matches_trace;
      rep.diagrams.push_back(std::move(check));
    }
  }

  // Traciality of the induced state on diagram products.
  for (int m = 1; m < max_n; ++m) {
    for (int n = 1; m + n <= max_n; ++n) {
      for (auto& x : enumerate_diagrams(m)) {
        for (auto& y : enumerate_diagrams(n)) {
          InclusionReport::TraceCheck tc;
          TLDiagram xy = tensor(x, y), yx = tensor(y, x);
          tc.left = xy.str();
          tc.right = yx.str();
          auto va = uniform_state(a, xy, rep.calibration.exponent);
          auto vb = uniform_state(a, yx, rep.calibration.exponent);
          tc.commutes = va && vb && *va == *vb;
          rep.ok = rep.ok && tc.commutes;
          rep.tracial_pairs.push_back(std::move(tc));
        }
      }
    }
  }

  // Negative control: the rejected exponent misses the n == 1 trace match.
  InclusionExponent other = rep.calibration.exponent == InclusionExponent::Half
                                ? InclusionExponent::One
                                : InclusionExponent::Half;
  rep.negative_control_failed = false;
  for (auto& diagram : enumerate_diagrams(1)) {
    auto va = uniform_state(a, diagram, other);
    bool matches_any = false;
    for (auto norm : {TraceNormalization::PerStrand, TraceNormalization::Unnormalized}) {
      SurdScalar trace(voiculescu_trace(diagram, rep.delta, norm));
      if (va && *va == trace) matches_any = true;
    }
    if (!matches_any) rep.negative_control_failed = true;
  }
  rep.ok = rep.ok && rep.negative_control_failed;
  return rep;
}

json InclusionReport::to_json() const {
  json doc;
  doc["schema"] = "graphvn-tl/1";
  doc["delta"] = fraction_string(delta);
  doc["calibration"] = {
      {"exponent", calibration.exponent == InclusionExponent::Half ? "1/2" : "1"},
      {"normalization", calibration.normalization == TraceNormalization::PerStrand
                            ? "per_strand"
                            : "unnormalized"}};
  doc["diagrams"] = json::array();
  for (auto& d : diagrams) {
    doc["diagrams"].push_back({{"diagram", d.diagram},
                               {"value_a", d.value_a},
                               {"value_b", d.value_b},
                               {"trace", d.trace},
                               {"graph_independent", d.graph_independent},
                               {"matches_trace", d.matches_trace}});
  }
  doc["tracial_pairs"] = json::array();
  for (auto& t : tracial_pairs) {
    doc["tracial_pairs"].push_back(
        {{"left", t.left}, {"right", t.right}, {"commutes", t.commutes}});
  }
  doc["negative_control_failed"] = negative_control_failed;
  doc["ok"] = ok;
  return doc;
}

}  // namespace graphvn
