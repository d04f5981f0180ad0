#include "graphvn/selftest.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "graphvn/classify.hpp"
#include "graphvn/fock.hpp"
#include "graphvn/harness.hpp"
#include "graphvn/lattice.hpp"
#include "graphvn/moments.hpp"

namespace graphvn {

bool SelfTestReport::all_passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const SelfTestItem& it) { return it.passed; });
}

namespace {

void run_item(SelfTestReport& rep, const std::string& name,
              const std::function<void()>& body) {
  SelfTestItem item;
  item.name = name;
  try {
    body();
    item.passed = true;
  } catch (const std::exception& ex) {
    item.passed = false;
    item.detail = ex.what();
  }
  rep.items.push_back(std::move(item));
}

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

}  // namespace

SelfTestReport run_selftest(std::uint64_t seed) {
  SelfTestReport rep;
  Rng rng(seed);

  run_item(rep, "random graphs validate cleanly", [&] {
    for (int i = 0; i < 40; ++i) {
      WeightedGraph g = random_connected_graph(rng, 2 + i % 5, i % 3);
      auto v = g.validate();
      expect(v.empty(), v.empty() ? "" : v.front().message);
    }
  });

  run_item(rep, "weight group survives relabeling and reversal", [&] {
    for (int i = 0; i < 12; ++i) {
      WeightedGraph g = random_connected_graph(rng, 3 + i % 4, 1 + i % 2);
      RationalLattice a = cycle_group(g);
      RationalLattice b = cycle_group(relabel_graph(g, rng));
      RationalLattice c = cycle_group(reverse_orientation(g));
      expect(a == b, "weight group changed under relabeling");
      expect(a == c, "weight group changed under orientation reversal");
    }
  });

  run_item(rep, "eigenvalue identity on random loops", [&] {
    for (int i = 0; i < 12; ++i) {
      WeightedGraph g = random_connected_graph(rng, 2 + i % 3, 1);
      TracialData td = tracial_subgraph(g, g.resolve_base());
      for (int k = 0; k < 8; ++k) {
        auto loop = random_loop(rng, g, 4);
        if (loop.empty()) continue;
        Word w = plain_word(loop);
        for (int e = 0; e < g.edge_count(); ++e) {
          EigenCheck chk = check_eigen_identity(g, td, e, w);
          expect(chk.holds, "eigenvalue identity failed");
        }
      }
    }
  });

  run_item(rep, "classification conserves mass", [&] {
    for (int i = 0; i < 24; ++i) {
      WeightedGraph g = random_connected_graph(rng, 2 + i % 5, i % 3);
      IsoClassReport r = classify(g);
      Rational total = r.diffuse.weight;
      for (const auto& a : r.atoms) total += a.mass;
      expect(total == r.state_total, "atom + diffuse mass mismatch");
      for (const auto& a : r.atoms) expect(a.mass > 0, "non-positive atom mass");
    }
  });

  run_item(rep, "loop rotation lands in the valid set", [&] {
    for (int i = 0; i < 60; ++i) {
      std::vector<Rational> w;
      int n = 1 + static_cast<int>(rng() % 8);
      Rational prod = 1;
      for (int k = 0; k < n; ++k) {
        w.push_back(random_weight(rng));
        prod *= w.back();
      }
      if (prod < 1) continue;
      std::size_t r = rotate_loop(w);
      expect(rotation_valid(w, r), "rotation violates prefix bound");
    }
  });

  run_item(rep, "series and simulation agree on short loops", [&] {
    for (int i = 0; i < 4; ++i) {
      WeightedGraph g = random_connected_graph(rng, 2 + i % 2, 1);
      TracialData td = tracial_subgraph(g, g.resolve_base());
      std::vector<std::vector<int>> words;
      for (int k = 0; k < 6; ++k) {
        auto loop = random_loop(rng, g, 4);
        if (!loop.empty()) words.push_back(loop);
      }
      if (words.empty()) continue;
      CrossCheck chk = cross_validate(g, td, words, 6, 1e-9);
      expect(chk.ok, "series and simulated moments diverge");
    }
  });

  return rep;
}

}  // namespace graphvn
