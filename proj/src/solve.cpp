#include "permlift/solve.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "branch_and_bound.hpp"
#include "permlift/errors.hpp"

namespace permlift {

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::closed_form_tree:
      return "closed_form_tree";
    case SolveMethod::closed_form_cycle:
      return "closed_form_cycle";
    case SolveMethod::propagate:
      return "propagate";
    case SolveMethod::lift:
      return "lift";
    case SolveMethod::branch_and_bound:
      return "branch_and_bound";
    case SolveMethod::brute_force:
      return "brute_force";
  }
  return "?";
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw ResourceLimit("assignment count overflows 64 bits");
  }
  return a * b;
}

// BFS tree of the component containing root: visiting order and the edge
// used to reach each vertex.
struct SpanningTree {
  std::vector<VertexId> order;
  std::vector<EdgeId> via;  // via[i] reaches order[i]; unused for i == 0
  std::vector<EdgeId> component_edges;
};

SpanningTree spanning_tree(const LabeledGraph& g, VertexId root) {
  SpanningTree t;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<bool> edge_seen(g.edge_count(), false);
  seen[root] = true;
  t.order.push_back(root);
  t.via.push_back(0);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const VertexId u = t.order[head];
    for (EdgeId e : g.incident(u)) {
      if (!edge_seen[e]) {
        edge_seen[e] = true;
        t.component_edges.push_back(e);
      }
      const VertexId w = g.other_end(e, u);
      if (!seen[w]) {
        seen[w] = true;
        t.order.push_back(w);
        t.via.push_back(e);
      }
    }
  }
  std::sort(t.component_edges.begin(), t.component_edges.end());
  return t;
}

// Writes the tree propagation of value c from t.order[0] into k and returns
// the number of violated component edges.
std::size_t propagate_tree(const LabeledGraph& g, const SpanningTree& t, Point c, VertexAssignment& k) {
  k[t.order[0]] = c;
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    const EdgeId e = t.via[i];
    const VertexId w = t.order[i];
    const VertexId u = g.other_end(e, w);
    k[w] = g.label_from(e, u)(k[u]);
  }
  std::size_t bad = 0;
  for (EdgeId e : t.component_edges) {
    const Edge& ed = g.edge(e);
    bad += ed.label(k[ed.from]) != k[ed.to];
  }
  return bad;
}

std::vector<VertexId> component_roots(const LabeledGraph& g) {
  std::vector<VertexId> roots;
  for (const auto& comp : underlying_properties(g).components) roots.push_back(comp.front());
  return roots;
}

SolveResult finish(const LabeledGraph& g, std::size_t beta_c, VertexAssignment optimal, SolveMethod method) {
  SolveResult r;
  r.beta_c = beta_c;
  r.optimal = std::move(optimal);
  r.contradiction_edges = contradictions(g, r.optimal);
  if (r.contradiction_edges.size() != beta_c) throw std::logic_error("optimal assignment does not realize beta_c");
  r.beta_c_prime = 1;
  for (const auto& values : consistent_root_values(g)) {
    r.component_beta_c_prime.push_back(values.size());
    r.beta_c_prime = checked_mul(r.beta_c_prime, values.size());
  }
  if (r.beta_c_prime > 0 && r.beta_c != 0) throw std::logic_error("consistent assignment exists but beta_c > 0");
  if (g.edge_count() > 0) r.omega = game_value(g, beta_c).omega;
  r.method = method;
  return r;
}

// Lexicographically least assignment over all components, each propagated
// from its least vertex with its least consistent root value.
VertexAssignment least_consistent(const LabeledGraph& g, const std::vector<std::vector<Point>>& roots) {
  VertexAssignment k{std::vector<Point>(g.vertex_count(), 0)};
  const auto root_ids = component_roots(g);
  for (std::size_t c = 0; c < root_ids.size(); ++c) {
    propagate_tree(g, spanning_tree(g, root_ids[c]), roots[c].front(), k);
  }
  return k;
}

}  // namespace

OracleReport brute_force(const LabeledGraph& g, std::uint64_t cap) {
  const std::size_t nv = g.vertex_count();
  const std::size_t n = g.n();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nv; ++i) {
    if (total > cap / n + 1) throw ResourceLimit("brute force over n^|V| assignments exceeds cap " + std::to_string(cap));
    total *= n;
  }
  if (total > cap) throw ResourceLimit("brute force over n^|V| assignments exceeds cap " + std::to_string(cap));

  OracleReport report;
  report.beta_c = std::numeric_limits<std::size_t>::max();
  VertexAssignment k{std::vector<Point>(nv, 0)};
  const auto& edges = g.edges();
  for (std::uint64_t step = 0; step < total; ++step) {
    std::size_t bad = 0;
    for (const Edge& ed : edges) bad += ed.label(k[ed.from]) != k[ed.to];
    if (bad == 0) ++report.beta_c_prime;
    if (bad < report.beta_c) {
      report.beta_c = bad;
      report.all_optimal.clear();
    }
    if (bad == report.beta_c) report.all_optimal.push_back(k);
    // Odometer with the last vertex fastest: lexicographic order.
    for (std::size_t i = nv; i-- > 0;) {
      if (++k[i] < n) break;
      k[i] = 0;
    }
  }
  report.enumerated = total;
  return report;
}

std::vector<Point> extendable_values(const LabeledGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw InvalidInput("vertex out of range");
  const SpanningTree t = spanning_tree(g, v);
  VertexAssignment k{std::vector<Point>(g.vertex_count(), 0)};
  std::vector<Point> out;
  for (Point c = 0; c < g.n(); ++c) {
    if (propagate_tree(g, t, c, k) == 0) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<Point>> consistent_root_values(const LabeledGraph& g) {
  std::vector<std::vector<Point>> out;
  for (VertexId root : component_roots(g)) out.push_back(extendable_values(g, root));
  return out;
}

std::uint64_t beta_c_prime_fast(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return 1;
  if (!underlying_properties(g).connected) throw InvalidInput("beta_c_prime_fast requires a connected graph");
  return extendable_values(g, 0).size();
}

std::optional<VertexAssignment> propagate_from(const LabeledGraph& g, VertexId root, Point value) {
  if (root >= g.vertex_count() || value >= g.n()) throw InvalidInput("root or value out of range");
  if (!underlying_properties(g).connected) throw InvalidInput("propagation requires a connected graph");
  VertexAssignment k{std::vector<Point>(g.vertex_count(), 0)};
  if (propagate_tree(g, spanning_tree(g, root), value, k) != 0) return std::nullopt;
  return k;
}

std::vector<VertexAssignment> consistent_assignments(const LabeledGraph& g) {
  std::vector<VertexAssignment> out;
  if (g.vertex_count() == 0) {
    out.emplace_back();
    return out;
  }
  if (!underlying_properties(g).connected) throw InvalidInput("consistent_assignments requires a connected graph");
  const SpanningTree t = spanning_tree(g, 0);
  VertexAssignment k{std::vector<Point>(g.vertex_count(), 0)};
  for (Point c = 0; c < g.n(); ++c) {
    if (propagate_tree(g, t, c, k) == 0) out.push_back(k);
  }
  return out;
}

SolveResult beta_c_exact(const LabeledGraph& g, const SolveOptions& options) {
  require_simple(g);
  const std::size_t nv = g.vertex_count();

  // Incumbent: per component, the best of the n root propagations.
  VertexAssignment incumbent{std::vector<Point>(nv, 0)};
  std::size_t upper = 0;
  for (VertexId root : component_roots(g)) {
    const SpanningTree t = spanning_tree(g, root);
    VertexAssignment trial = incumbent;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    Point best_c = 0;
    for (Point c = 0; c < g.n(); ++c) {
      const std::size_t bad = propagate_tree(g, t, c, trial);
      if (bad < best) {
        best = bad;
        best_c = c;
      }
    }
    propagate_tree(g, t, best_c, incumbent);
    upper += best;
  }

  detail::NodeBudget budget(options.node_cap);
  const detail::ContradictionSearch search(g);
  std::size_t beta = upper;
  VertexAssignment witness = incumbent;
  if (auto better = search.minimize(upper, options.threads, budget)) {
    beta = better->violations;
    witness = std::move(better->assignment);
  }

  // Lexicographically least optimum: fix vertices in id order, trying each
  // smaller value before accepting the witness's.
  std::vector<std::optional<Point>> fixed(nv);
  for (VertexId v = 0; v < nv; ++v) {
    for (Point a = 0; a < witness[v]; ++a) {
      fixed[v] = a;
      if (auto hit = search.feasible(fixed, beta, budget)) {
        witness = std::move(hit->assignment);
        break;
      }
    }
    fixed[v] = witness[v];
  }
  return finish(g, beta, std::move(witness), SolveMethod::branch_and_bound);
}

CycleWalk walk_cycle(const LabeledGraph& g) {
  if (!is_single_cycle(g)) throw InvalidInput("underlying graph is not a single cycle");
  const std::size_t t = g.vertex_count();
  CycleWalk walk{{}, {}, Permutation::identity(g.n())};
  VertexId cur = 0;
  EdgeId prev = g.incident(0).back();
  for (std::size_t step = 0; step < t; ++step) {
    const auto& inc = g.incident(cur);
    const EdgeId e = (step == 0) ? inc.front() : (inc[0] == prev ? inc[1] : inc[0]);
    walk.vertices.push_back(cur);
    walk.edges.push_back(e);
    walk.holonomy = compose(g.label_from(e, cur), walk.holonomy);
    cur = g.other_end(e, cur);
    prev = e;
  }
  if (cur != 0) throw std::logic_error("cycle walk did not close");
  return walk;
}

Permutation walk_permutation(const LabeledGraph& g, const std::vector<VertexId>& closed_walk) {
  Permutation acc = Permutation::identity(g.n());
  for (std::size_t i = 0; i < closed_walk.size(); ++i) {
    const VertexId a = closed_walk[i];
    const VertexId b = closed_walk[(i + 1) % closed_walk.size()];
    std::optional<EdgeId> link;
    for (EdgeId e : g.incident(a)) {
      if (g.other_end(e, a) == b) {
        link = e;
        break;
      }
    }
    if (!link) throw InvalidInput("walk uses a missing edge " + g.name(a) + "-" + g.name(b));
    acc = compose(g.label_from(*link, a), acc);
  }
  return acc;
}

SolveResult cycle_closed_form(const LabeledGraph& g) {
  require_simple(g);
  const CycleWalk walk = walk_cycle(g);
  const auto fixed = walk.holonomy.fixed_points();
  const std::size_t t = walk.vertices.size();
  VertexAssignment k{std::vector<Point>(t, 0)};

  auto fill = [&](Point start, std::size_t broken) {
    // Propagate forward over edges [0, broken) and backward over (broken, t).
    k[walk.vertices[0]] = start;
    for (std::size_t j = 0; j < broken; ++j) {
      k[walk.vertices[j + 1]] = g.label_from(walk.edges[j], walk.vertices[j])(k[walk.vertices[j]]);
    }
    for (std::size_t j = t - 1; j > broken; --j) {
      const VertexId ahead = walk.vertices[(j + 1) % t];
      k[walk.vertices[j]] = g.label_from(walk.edges[j], ahead)(k[ahead]);
    }
  };

  SolveResult r;
  if (!fixed.empty()) {
    fill(fixed.front(), t - 1);
    r = finish(g, 0, k, SolveMethod::closed_form_cycle);
  } else {
    // Every optimum breaks exactly one edge; enumerate (edge, root value).
    std::optional<VertexAssignment> best;
    for (std::size_t broken = 0; broken < t; ++broken) {
      for (Point c = 0; c < g.n(); ++c) {
        fill(c, broken);
        if (!best || k < *best) best = k;
      }
    }
    r = finish(g, 1, *best, SolveMethod::closed_form_cycle);
  }
  if (r.beta_c_prime != fixed.size()) throw std::logic_error("cycle fixed points disagree with propagation");
  return r;
}

SolveResult tree_closed_form(const LabeledGraph& g) {
  require_simple(g);
  if (!is_forest(g)) throw InvalidInput("underlying graph is not a forest");
  VertexAssignment k{std::vector<Point>(g.vertex_count(), 0)};
  for (VertexId root : component_roots(g)) {
    if (propagate_tree(g, spanning_tree(g, root), 0, k) != 0) throw std::logic_error("tree propagation failed");
  }
  SolveResult r = finish(g, 0, std::move(k), SolveMethod::closed_form_tree);
  for (auto count : r.component_beta_c_prime) {
    if (count != g.n()) throw std::logic_error("tree component is not good");
  }
  return r;
}

SolveResult solve(const LabeledGraph& g, const SolveOptions& options) {
  require_simple(g);
  if (is_forest(g)) return tree_closed_form(g);
  if (is_single_cycle(g)) return cycle_closed_form(g);
  const auto roots = consistent_root_values(g);
  const bool proper = std::all_of(roots.begin(), roots.end(), [](const auto& v) { return !v.empty(); });
  if (proper) return finish(g, 0, least_consistent(g, roots), SolveMethod::propagate);
  return beta_c_exact(g, options);
}

}  // namespace permlift
