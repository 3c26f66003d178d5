// Acceptance suite: one PASS/FAIL line per criterion, each under a fixed
// wall-clock budget. Exit status is the number of unexpected results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permlift/cli.hpp"
#include "permlift/equiv.hpp"
#include "permlift/generate.hpp"
#include "permlift/io.hpp"
#include "permlift/lift.hpp"
#include "permlift/solve.hpp"
#include "permlift/special.hpp"
#include "permlift/xform.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace permlift;

namespace {

// Collects the first few failures of a criterion.
class Verdict {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  std::size_t failures() const { return failures_; }
  std::string summary() const {
    return failures_ == 0 ? "" : std::to_string(failures_) + " failure(s): " + detail_;
  }

 private:
  std::size_t failures_ = 0;
  std::string detail_;
};

std::string seed_tag(std::uint64_t seed) { return "seed " + std::to_string(seed); }

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph g(a.n(), a.mode());
  for (VertexId v = 0; v < a.vertex_count(); ++v) g.add_vertex("a" + std::to_string(v));
  for (VertexId v = 0; v < b.vertex_count(); ++v) g.add_vertex("b" + std::to_string(v));
  for (const auto& e : a.edges()) g.add_edge(e.from, e.to, e.label);
  for (const auto& e : b.edges()) g.add_edge(a.vertex_count() + e.from, a.vertex_count() + e.to, e.label);
  return g;
}

// Connected bipartite graph on sides [0, s) and [s, s + t), labels drawn from `family`.
LabeledGraph random_bipartite(Rng& rng, std::size_t s, std::size_t t, const std::vector<Permutation>& family,
                              double extra) {
  LabeledGraph g = fixtures::with_names(family.front().degree(), s + t);
  std::vector<std::vector<bool>> used(s + t, std::vector<bool>(s + t, false));
  auto add = [&](VertexId a, VertexId b) {
    used[a][b] = used[b][a] = true;
    if (rng.below(2)) std::swap(a, b);
    g.add_edge(a, b, family[rng.below(family.size())]);
  };
  // Spanning tree: v0 - v_s, remaining left vertices to v_s, remaining right vertices to any left one.
  add(0, s);
  for (VertexId a = 1; a < s; ++a) add(a, s);
  for (VertexId b = s + 1; b < s + t; ++b) add(rng.below(s), b);
  for (VertexId a = 0; a < s; ++a) {
    for (VertexId b = s; b < s + t; ++b) {
      if (!used[a][b] && rng.unit() < extra) add(a, b);
    }
  }
  return g;
}

bool has_fixed_point(const std::vector<std::uint32_t>& p) { return oracle::fixed_count(p) > 0; }

// ---- criteria ----

std::string worked_example() {
  Verdict v;
  const LabeledGraph g = load_instance("data/no_assignment_c4.json").graph;
  const SolveResult best = solve(g);
  v.expect(best.beta_c_prime == 0, "beta_c_prime != 0");
  v.expect(best.beta_c == 1, "beta_c != 1");
  v.expect(best.omega && best.omega->to_string() == "3/4", "omega != 3/4");

  const SolveResult cyc = cycle_closed_form(g);
  const SolveResult bb = beta_c_exact(g);
  const OracleReport brute = brute_force(g);
  const oracle::Counts independent = oracle::enumerate(g);
  for (const auto& [name, bc, bcp] : {std::tuple{"cycle", cyc.beta_c, cyc.beta_c_prime},
                                      std::tuple{"branch-and-bound", bb.beta_c, bb.beta_c_prime},
                                      std::tuple{"brute force", brute.beta_c, brute.beta_c_prime},
                                      std::tuple{"test oracle", independent.beta_c, independent.beta_c_prime}}) {
    v.expect(bc == 1 && bcp == 0, std::string(name) + " disagrees");
  }
  v.expect(cyc.optimal == bb.optimal && bb.optimal.values == std::vector<Point>(independent.optima.front().begin(),
                                                                                  independent.optima.front().end()),
           "optimal assignments differ");

  const LiftGraph lift = build_lift(g);
  const ComponentSummary s = component_analysis(lift);
  v.expect(lift.vertex_count() == 12, "lift does not have 12 vertices");
  v.expect(s.components.size() == 1, "lift is not connected");
  v.expect(s.classification == Classification::bad, "lift not classified bad");
  v.expect(fiber_degree_ok(lift), "fiber degree");
  return v.summary();
}

std::string tree_law() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    GenSpec spec;
    spec.model = GraphModel::tree;
    spec.size = 1 + rng.below(10);
    spec.n = 1 + rng.below(5);
    spec.labels = LabelSource::uniform_sn;
    spec.seed = rng.bits();
    const LabeledGraph g = generate(spec);
    const SolveResult r = solve(g);
    v.expect(r.beta_c == 0, seed_tag(seed) + ": beta_c != 0");
    v.expect(r.component_beta_c_prime == std::vector<std::uint64_t>{spec.n}, seed_tag(seed) + ": count != n");
    if (g.edge_count() > 0) {
      const SolveResult closed = tree_closed_form(g);
      v.expect(closed.beta_c == 0 && closed.beta_c_prime == spec.n, seed_tag(seed) + ": closed form");
    }
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) space *= spec.n;
    if (space <= 200'000) {
      const oracle::Counts o = oracle::enumerate(g);
      v.expect(o.beta_c == 0 && o.beta_c_prime == spec.n, seed_tag(seed) + ": oracle disagrees");
    }
  }
  return v.summary();
}

std::string cycle_law() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(1000 + seed);
    const std::size_t length = 3 + rng.below(4);
    const std::size_t n = 1 + rng.below(4);
    const Mode mode = rng.below(2) ? Mode::directed : Mode::undirected;
    LabeledGraph g = fixtures::with_names(n, length, mode);
    for (VertexId i = 0; i < length; ++i) {
      VertexId a = i, b = (i + 1) % length;
      if (rng.below(2)) std::swap(a, b);
      g.add_edge(a, b, random_permutation(n, rng));
    }
    std::vector<std::size_t> walk(length);
    for (std::size_t i = 0; i < length; ++i) walk[i] = i;
    const std::size_t fixed = oracle::fixed_count(oracle::holonomy(oracle::raw(g), walk));
    const SolveResult closed = cycle_closed_form(g);
    const oracle::Counts brute = oracle::enumerate(g);
    v.expect(closed.beta_c_prime == fixed, seed_tag(seed) + ": count != fixed points");
    v.expect(closed.beta_c == (fixed == 0 ? 1u : 0u), seed_tag(seed) + ": beta_c != [count = 0]");
    v.expect(brute.beta_c_prime == fixed && brute.beta_c == closed.beta_c, seed_tag(seed) + ": brute force");
  }
  return v.summary();
}

std::string lift_law() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(2000 + seed);
    const LabeledGraph g = fixtures::random_connected(rng, 1 + rng.below(6), 1 + rng.below(4), 0.35,
                                                      rng.below(2) ? Mode::directed : Mode::undirected);
    const LiftGraph lift = build_lift(g);
    const ComponentSummary s = component_analysis(lift);
    const oracle::Counts brute = oracle::enumerate(g);
    v.expect(s.isomorphic_to_base_count == brute.beta_c_prime, seed_tag(seed) + ": copies != count");
    v.expect(fiber_degree_ok(lift), seed_tag(seed) + ": fiber degree");
    std::size_t copies = 0;
    for (std::size_t size : oracle::lift_component_sizes(oracle::raw(g))) copies += size == g.vertex_count();
    v.expect(copies == brute.beta_c_prime, seed_tag(seed) + ": independent lift disagrees");
    v.expect(s.classification == classify_count(brute.beta_c_prime, g.n()), seed_tag(seed) + ": classification");
  }
  return v.summary();
}

std::string s3_trichotomy() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(3000 + seed);
    const LabeledGraph g = fixtures::random_connected(rng, 2 + rng.below(6), 3, rng.unit() * 0.6,
                                                      rng.below(2) ? Mode::directed : Mode::undirected);
    const SolveResult r = solve(g);
    v.expect(r.beta_c_prime == 0 || r.beta_c_prime == 1 || r.beta_c_prime == 3,
             seed_tag(seed) + ": count " + std::to_string(r.beta_c_prime));
    v.expect(r.beta_c_prime == oracle::enumerate(g).beta_c_prime, seed_tag(seed) + ": oracle disagrees");
  }
  return v.summary();
}

std::string equivalence_invariance() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(4000 + seed);
    const LabeledGraph g1 = fixtures::random_connected(rng, 1 + rng.below(6), 1 + rng.below(4), 0.35,
                                                       rng.below(2) ? Mode::directed : Mode::undirected);
    std::vector<VertexId> order(g1.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    const LabeledGraph g2 = fixtures::reorder(fixtures::random_moves(g1, rng), order);

    const auto w = are_equivalent(g1, g2);
    v.expect(w.has_value(), seed_tag(seed) + ": no witness");
    if (!w) continue;
    v.expect(same_labeled_graph(apply_witness(g1, *w, g2), g2), seed_tag(seed) + ": witness does not map g1 to g2");
    const LiftIsomorphism map = witness_to_lift_isomorphism(*w, g1, g2);
    v.expect(verify_lift_isomorphism(map, build_lift(g1), build_lift(g2)), seed_tag(seed) + ": lift map");
    const SolveResult r1 = solve(g1);
    const SolveResult r2 = solve(g2);
    v.expect(r1.beta_c == r2.beta_c && r1.beta_c_prime == r2.beta_c_prime, seed_tag(seed) + ": numbers differ");
  }
  return v.summary();
}

// The literal lower bound beta_c(G) - 1 <= beta_c(H) is tallied apart from
// everything else: it fails when identification drops two or more edges.
struct Outcome {
  std::string problem;
  std::string known;  // failure of a check expected to fail
};

Outcome structural_inequalities() {
  Verdict v;
  std::size_t cross = 0, identifications = 0, literal_failures = 0, literal_single_drop_failures = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(5000 + seed);
    const std::size_t n = 1 + rng.below(4);
    const Mode mode = rng.below(2) ? Mode::directed : Mode::undirected;
    LabeledGraph g = fixtures::random_connected(rng, 2 + rng.below(4), n, 0.4, mode);
    if (seed % 2 == 1) g = disjoint_union(g, fixtures::random_connected(rng, 1 + rng.below(3), n, 0.4, mode));
    const std::string tag = seed_tag(seed);
    const SolveResult base = solve(g);

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const LabeledGraph smaller = delete_edge(g, e);
      const std::size_t bc = min_contradictions(smaller);
      v.expect(bc + 1 >= base.beta_c && bc <= base.beta_c, tag + ": deleting edge " + std::to_string(e));
      v.expect(brute_force(smaller).beta_c_prime >= base.beta_c_prime, tag + ": count fell after deletion");
    }

    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
        const IdentifySpec spec{a, b, "", ConflictPolicy::prefer_v1};
        const IdentifyBounds r = check_identify_bounds(g, spec);
        const std::string where = tag + ": identify " + g.name(a) + "," + g.name(b);
        ++identifications;
        if (r.beta_c_g > r.beta_c_h + 1) {
          ++literal_failures;
          literal_single_drop_failures += r.dropped <= 1;
        }
        v.expect(r.lower_holds.value_or(true), where + " lower bound with at most one dropped edge");
        v.expect(r.lower_by_dropped_holds, where + " lower bound less dropped edges");
        v.expect(r.upper_holds, where + " upper bound");
        if (!r.same_component) {
          ++cross;
          v.expect(r.shared.has_value(), where + " no shared-value check");
          if (!r.shared) continue;
          const SharedValueCheck& s = *r.shared;
          v.expect(s.lower_holds && s.upper_holds, where + " assignment bounds");
          v.expect(s.intersection_holds, where + " intersection");
          v.expect(s.pigeonhole_holds, where + " pigeonhole");
        }
      }
    }
  }
  v.expect(cross > 0, "no cross-component identification exercised");
  v.expect(literal_single_drop_failures == 0, "literal lower bound failed with at most one dropped edge");
  Outcome out{v.summary(), ""};
  if (literal_failures > 0) {
    out.known = "literal lower bound fails on " + std::to_string(literal_failures) + " of " +
                std::to_string(identifications) + " identifications, each dropping two or more edges";
  }
  return out;
}

std::string bipartization() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(6000 + seed);
    GenSpec spec;
    spec.size = 1 + rng.below(8);
    spec.p = 0.15 + 0.7 * rng.unit();
    spec.n = 1 + rng.below(3);
    spec.seed = rng.bits();
    const LabeledGraph g = generate(spec);
    const std::size_t fast = edge_bipartization(g).beta_c2;
    v.expect(fast == min_bipartization_by_deletion(g).size(), seed_tag(seed) + ": deletion oracle");
    v.expect(fast == g.edge_count() - oracle::max_cut(g.vertex_count(), oracle::pairs(g)), seed_tag(seed) + ": max-cut");
  }
  const LabeledGraph c5 = fixtures::cycle(std::vector<Permutation>(5, Permutation::identity(1)));
  v.expect(edge_bipartization(c5).beta_c2 == 1, "C5");
  v.expect(edge_bipartization(fixtures::complete(5, Permutation::identity(1))).beta_c2 == 4, "K5");
  GenSpec kst;
  kst.model = GraphModel::complete_bipartite;
  kst.size = 3;
  kst.other_side = 4;
  v.expect(edge_bipartization(generate(kst)).beta_c2 == 0, "K_{3,4}");
  const LabeledGraph c6 = fixtures::cycle(std::vector<Permutation>(6, Permutation::identity(1)));
  v.expect(edge_bipartization(c6).beta_c2 == 0, "C6");
  return v.summary();
}

std::string latin_laws() {
  Verdict v;
  // Every L_n and L'_n labelling of cycles of length 3..6 with n <= 5.
  for (std::size_t n = 1; n <= 5; ++n) {
    for (LatinKind kind : {LatinKind::L, LatinKind::Lprime}) {
      const std::vector<Permutation> family = latin_family(n, kind).members;
      for (std::size_t length = 3; length <= 6; ++length) {
        std::vector<std::size_t> pick(length, 0);
        while (true) {
          std::vector<Permutation> labels;
          for (std::size_t i : pick) labels.push_back(family[i]);
          const LabeledGraph g = fixtures::cycle(labels, kind == LatinKind::L ? Mode::undirected : Mode::directed);
          std::vector<std::size_t> walk(length);
          for (std::size_t i = 0; i < length; ++i) walk[i] = i;
          const std::size_t fixed = oracle::fixed_count(oracle::holonomy(oracle::raw(g), walk));
          const std::string tag = std::string(to_string(kind)) + " n=" + std::to_string(n) + " length " +
                                  std::to_string(length);
          bool law = false;
          if (kind == LatinKind::Lprime || length % 2 == 0) {
            law = fixed == 0 || fixed == n;
          } else {
            law = n % 2 == 1 ? fixed == 1 : (fixed == 0 || fixed == 2);
          }
          v.expect(law, tag + ": count " + std::to_string(fixed));
          if (n >= 2) {
            const CycleClassification c = classify_cycle_latin(g);
            v.expect(c.assignment_count == fixed && c.law_holds, tag + ": library disagrees");
          }
          if (length <= 4) v.expect(oracle::enumerate(g).beta_c_prime == fixed, tag + ": brute force");
          std::size_t i = 0;
          while (i < length && ++pick[i] == family.size()) pick[i++] = 0;
          if (i == length) break;
        }
      }
    }
  }

  // Directed L'_n connected instances.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(7000 + seed);
    const std::size_t n = 2 + rng.below(4);
    const auto family = latin_family(n, LatinKind::Lprime).members;
    LabeledGraph g = fixtures::random_connected(rng, 2 + rng.below(5), n, 0.4, Mode::directed);
    std::vector<Permutation> labels;
    for (std::size_t e = 0; e < g.edge_count(); ++e) labels.push_back(family[rng.below(n)]);
    LabeledGraph relabelled(n, Mode::directed);
    for (const auto& name : g.vertex_names()) relabelled.add_vertex(name);
    for (EdgeId e = 0; e < g.edge_count(); ++e) relabelled.add_edge(g.edge(e).from, g.edge(e).to, labels[e]);
    const std::uint64_t count = oracle::enumerate(relabelled).beta_c_prime;
    v.expect(count == 0 || count == n, seed_tag(seed) + ": directed L' count " + std::to_string(count));
    const DirectedLatinReport r = directed_lprime_classify(relabelled);
    v.expect(r.component_counts == std::vector<std::uint64_t>{count} && r.law_holds,
             seed_tag(seed) + ": directed L' report");
  }

  // Non-bipartite L_n instances, n >= 3.
  std::size_t nonbipartite = 0;
  for (std::uint64_t seed = 0; seed < 300 && nonbipartite < 150; ++seed) {
    Rng rng(8000 + seed);
    const std::size_t n = 3 + rng.below(3);
    const auto family = latin_family(n, LatinKind::L).members;
    const LabeledGraph shape = fixtures::random_connected(rng, 3 + rng.below(4), 1, 0.5, Mode::undirected);
    if (underlying_properties(shape).bipartite) continue;
    ++nonbipartite;
    LabeledGraph g(n, Mode::undirected);
    for (const auto& name : shape.vertex_names()) g.add_vertex(name);
    for (const auto& e : shape.edges()) g.add_edge(e.from, e.to, family[rng.below(n)]);
    const LatinBoundReport r = nonbipartite_latin_bound(g);
    const std::uint64_t count = oracle::enumerate(g).beta_c_prime;
    v.expect(r.beta_c_prime == count, seed_tag(seed) + ": non-bipartite count");
    v.expect(count <= (n % 2 == 1 ? 1u : 2u) && r.holds, seed_tag(seed) + ": non-bipartite bound");
  }
  v.expect(nonbipartite >= 100, "too few non-bipartite instances");

  // Bad bipartite L_n instances carry a bad chordless cycle.
  std::size_t bad_seen = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(9000 + seed);
    const std::size_t n = 2 + rng.below(4);
    const LabeledGraph g = random_bipartite(rng, 2 + rng.below(2), 2 + rng.below(3),
                                            latin_family(n, LatinKind::L).members, 0.5);
    const std::uint64_t count = oracle::enumerate(g).beta_c_prime;
    const BipartiteLatinReport r = bipartite_bad_witness(g);
    v.expect(r.beta_c_prime == count, seed_tag(seed) + ": bipartite count");
    v.expect(count == 0 || count == n, seed_tag(seed) + ": bipartite law");
    if (count != 0) {
      v.expect(!r.witness, seed_tag(seed) + ": witness on a good instance");
      continue;
    }
    ++bad_seen;
    v.expect(r.witness.has_value(), seed_tag(seed) + ": no witness");
    if (!r.witness) continue;
    std::vector<std::size_t> walk(r.witness->cycle.begin(), r.witness->cycle.end());
    v.expect(!has_fixed_point(oracle::holonomy(oracle::raw(g), walk)), seed_tag(seed) + ": witness has a fixed point");
  }
  v.expect(bad_seen >= 50, "too few bad bipartite instances");

  // K_{s,t}: bad iff some 4-cycle is bad, for s, t <= 4.
  for (std::size_t s = 2; s <= 4; ++s) {
    for (std::size_t t = s; t <= 4; ++t) {
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(10'000 + 100 * (4 * s + t) + seed);
        const std::size_t n = 2 + rng.below(4);
        const auto family = latin_family(n, LatinKind::L).members;
        const auto shifts = latin_family(n, LatinKind::Lprime).members;
        GenSpec spec;
        spec.model = GraphModel::complete_bipartite;
        spec.size = s;
        spec.other_side = t;
        spec.n = n;
        const LabeledGraph shape = generate(spec);
        LabeledGraph g(n, Mode::undirected);
        for (const auto& name : shape.vertex_names()) g.add_vertex(name);
        for (const auto& e : shape.edges()) g.add_edge(e.from, e.to, family[0]);
        // Half the instances are good: switch a constant labelling by shifts, which keeps it in L_n.
        if (seed % 2 == 0) {
          for (VertexId x = 0; x < g.vertex_count(); ++x) g = switch_vertex(g, SwitchOp{x, shifts[rng.below(n)]});
        } else {
          LabeledGraph mixed(n, Mode::undirected);
          for (const auto& name : g.vertex_names()) mixed.add_vertex(name);
          for (const auto& e : g.edges()) mixed.add_edge(e.from, e.to, family[rng.below(n)]);
          g = mixed;
        }
        bool bad_square = false;
        const oracle::Raw raw = oracle::raw(g);
        for (std::size_t a1 = 0; a1 < s; ++a1)
          for (std::size_t a2 = a1 + 1; a2 < s; ++a2)
            for (std::size_t b1 = s; b1 < s + t; ++b1)
              for (std::size_t b2 = b1 + 1; b2 < s + t; ++b2)
                bad_square = bad_square || !has_fixed_point(oracle::holonomy(raw, {a1, b1, a2, b2}));
        const bool bad = solve(g).beta_c_prime == 0;
        const std::string tag = "K_{" + std::to_string(s) + "," + std::to_string(t) + "} " + seed_tag(seed);
        v.expect(bad == bad_square, tag + ": bad != bad 4-cycle");
        const BipartiteLatinReport r = bipartite_bad_witness(g);
        v.expect(r.complete_bipartite && r.witness.has_value() == bad, tag + ": witness");
        if (r.witness) v.expect(r.witness->cycle.size() == 4, tag + ": witness is not a 4-cycle");
      }
    }
  }
  return v.summary();
}

std::string determinism() {
  Verdict v;
  const std::string dir = std::filesystem::temp_directory_path().string() + "/permlift_acceptance_";
  const std::string random_file = dir + "gnp.json";
  {
    std::ostringstream out, err;
    cli::run({"gen", "--model", "gnp", "--size", "7", "--p", "0.6", "--n", "3", "--labels", "uniform_sn", "--seed",
              "31", "--out", random_file},
             out, err);
  }
  auto capture = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  const std::vector<std::vector<std::string>> threaded = {
      {"solve", "data/no_assignment_c4.json", "--json"},
      {"solve", "data/no_assignment_c4.json", "--json", "--method", "bb"},
      {"solve", random_file, "--json", "--method", "bb"},
      {"solve", random_file, "--json"},
      {"bipartize", "data/k5.json", "--json", "--oracle"},
      {"signed", "data/c5.json", "--json"},
      {"identify", "data/no_assignment_c4.json", "v0", "v2", "--json"},
      {"identify", "data/two_edges.json", "v1", "v3", "--json"},
      {"oracle", "data/no_assignment_c4.json", "--json"},
  };
  const std::vector<std::vector<std::string>> plain = {
      {"lift", "data/no_assignment_c4.json", "--json"},
      {"equiv", "data/no_assignment_c4.json", "data/no_assignment_c4.json"},
      {"equiv", "data/no_assignment_c4.json", "data/identity_c4.json", "--json"},
      {"latin", "data/latin_c3.json", "--json"},
      {"latin", "data/lprime_c3.json", "--json"},
      {"validate", random_file, "--json"},
      {"gen", "--model", "complete_bipartite", "--size", "3", "--t", "3", "--labels", "latin_L", "--seed", "5"},
      {"gen", "--model", "tree", "--size", "8", "--n", "4", "--seed", "18446744073709551615"},
  };
  for (const auto& args : plain) {
    const std::string first = capture(args);
    v.expect(first == capture(args), "rerun differs: " + args.front());
    v.expect(first.rfind("0\n", 0) == 0 || first.rfind("3\n", 0) == 0, "unexpected exit: " + args.front());
  }
  for (const auto& args : threaded) {
    const std::string first = capture(args);
    v.expect(first.rfind("0\n", 0) == 0, "unexpected exit: " + args.front());
    for (const char* threads : {"1", "2", "4", "8"}) {
      std::vector<std::string> with = args;
      with.insert(with.end(), {"--threads", threads});
      v.expect(capture(with) == first, "thread count changes output: " + args.front() + " --threads " + threads);
    }
  }
  std::filesystem::remove(random_file);
  return v.summary();
}

Outcome plain(std::string (*check)()) { return Outcome{check(), ""}; }

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> check;
  bool expected_to_fail = false;  // strict: passing is reported as a failure too
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example: beta_c=1, no consistent assignment, omega=3/4, one 12-vertex lift", 1.0, [] { return plain(worked_example); }},
      {2, "tree law on 200 seeded trees", 5.0, [] { return plain(tree_law); }},
      {3, "cycle law on 500 seeded cycles", 30.0, [] { return plain(cycle_law); }},
      {4, "lift copies equal consistent assignments on 300 instances", 60.0, [] { return plain(lift_law); }},
      {5, "S_3 trichotomy on 300 instances", 30.0, [] { return plain(s3_trichotomy); }},
      {6, "switching equivalence invariance on 200 instances", 60.0, [] { return plain(equivalence_invariance); }},
      {7, "deletion and identification inequalities on 200 instances", 60.0, structural_inequalities, true},
      {8, "edge bipartization against deletion and max-cut oracles", 60.0, [] { return plain(bipartization); }},
      {9, "Latin-square labelling laws", 120.0, [] { return plain(latin_laws); }},
      {10, "byte-identical CLI output across reruns and thread counts", 30.0, [] { return plain(determinism); }},
  };
  int unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.problem = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.problem.empty() && elapsed >= c.limit_seconds) o.problem = "over the time limit";
    const bool pass = o.problem.empty() && o.known.empty();
    std::string note = o.problem;
    if (!o.known.empty()) note += (note.empty() ? "" : "; ") + ("expected failure: " + o.known);
    if (c.expected_to_fail && pass) note = "expected failure did not occur";
    // An expected failure counts only when nothing else in the criterion failed.
    const bool as_expected = c.expected_to_fail ? (o.problem.empty() && !o.known.empty()) : pass;
    unexpected += as_expected ? 0 : 1;
    std::printf("%s %2d  %s  (%.2fs, limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, elapsed,
                c.limit_seconds, note.empty() ? "" : "  ", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d unexpected result(s)\n", unexpected);
  return unexpected;
}
