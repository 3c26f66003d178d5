#include "permlift/special.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permlift/errors.hpp"

namespace permlift {

namespace {

VertexSplit split_by_value(const VertexAssignment& k) {
  VertexSplit out;
  for (VertexId v = 0; v < k.size(); ++v) (k[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

// Two-colouring where `cross(e)` edges join different colours and the rest
// join equal colours. Returns the colours, or nothing on a conflict.
std::optional<std::vector<int>> two_colour(const LabeledGraph& g, const std::function<bool(EdgeId)>& cross,
                                          const std::vector<bool>& skip = {}) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(u)) {
        if (!skip.empty() && skip[e]) continue;
        const VertexId w = g.other_end(e, u);
        const int want = colour[u] ^ (cross(e) ? 1 : 0);
        if (colour[w] == -1) {
          colour[w] = want;
          stack.push_back(w);
        } else if (colour[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_transposition(const Permutation& p) {
  const auto cycles = p.cycles();
  return cycles.size() == 1 && cycles.front().size() == 2;
}

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw ResourceLimit("assignment count overflows 64 bits");
  return a * b;
}

LabeledGraph all_negative_copy(const LabeledGraph& g) {
  LabeledGraph out(2, Mode::undirected);
  for (const auto& name : g.vertex_names()) out.add_vertex(name);
  const Permutation swap = Permutation::from_cycles(2, {{0, 1}});
  for (const Edge& ed : g.edges()) out.add_edge(ed.from, ed.to, swap);
  return out;
}

}  // namespace

SignedReport signed_analyze(const LabeledGraph& g, const SolveOptions& options) {
  if (g.n() != 2) throw InvalidInput("signed graphs need n = 2");
  require_simple(g);
  SignedReport r;
  const auto colour = two_colour(g, [&](EdgeId e) { return !g.edge(e).label.is_identity(); });
  r.balanced = colour.has_value();
  if (g.edge_count() == 0) {
    r.partition = split_by_value(VertexAssignment{std::vector<Point>(g.vertex_count(), 0)});
    return r;
  }
  const SolveResult s = beta_c_exact(g, options);
  r.frustration = s.beta_c;
  r.frustrated_edges = s.contradiction_edges;
  if (r.balanced != (r.frustration == 0)) throw std::logic_error("balance test disagrees with the exact solver");
  if (r.balanced) r.partition = split_by_value(s.optimal);
  return r;
}

AllNegativeReport all_negative_check(const LabeledGraph& g) {
  if (g.edge_count() == 0) throw InvalidInput("all-negative check needs at least one edge");
  require_simple(g);
  const Permutation label = g.edge(0).label;
  if (!is_transposition(label)) throw InvalidInput("edge label " + label.to_cycle_string() + " is not a transposition");
  for (const Edge& ed : g.edges()) {
    if (ed.label != label) throw InvalidInput("edges carry different labels");
  }

  AllNegativeReport r;
  r.label = label;
  const auto props = underlying_properties(g);
  r.bipartite = props.bipartite;
  const std::uint64_t n = g.n();
  r.consistent_count = 1;
  r.predicted_count = 1;
  for (const auto& values : consistent_root_values(g)) r.consistent_count = checked_product(r.consistent_count, values.size());
  for (const auto& comp : props.components) {
    const LabeledGraph sub = [&] {
      LabeledGraph s(g.n(), g.mode());
      std::vector<VertexId> at(g.vertex_count());
      for (VertexId v : comp) at[v] = s.add_vertex(g.name(v));
      for (const Edge& ed : g.edges()) {
        if (std::binary_search(comp.begin(), comp.end(), ed.from)) s.add_edge(at[ed.from], at[ed.to], ed.label);
      }
      return s;
    }();
    const bool comp_bipartite = underlying_properties(sub).bipartite;
    r.predicted_count = checked_product(r.predicted_count, comp_bipartite ? n : n - 2);
  }
  r.vertex_proper = r.consistent_count > 0;

  if (props.connected) {
    std::vector<VertexAssignment> predicted;
    if (props.bipartite) {
      const auto colour = two_colour(g, [](EdgeId) { return true; });
      for (Point c = 0; c < n; ++c) {
        VertexAssignment k{std::vector<Point>(g.vertex_count())};
        for (VertexId v = 0; v < g.vertex_count(); ++v) k[v] = (*colour)[v] == 0 ? c : label(c);
        predicted.push_back(std::move(k));
      }
    } else {
      for (Point c : label.fixed_points()) predicted.push_back(VertexAssignment{std::vector<Point>(g.vertex_count(), c)});
    }
    std::sort(predicted.begin(), predicted.end());
    r.assignments_match = predicted == consistent_assignments(g);
  }
  return r;
}

BipartizationResult edge_bipartization(const LabeledGraph& g, const SolveOptions& options) {
  const LabeledGraph signed_graph = all_negative_copy(g);
  require_simple(signed_graph);
  BipartizationResult r;
  if (signed_graph.edge_count() == 0) {
    r.residual_bipartition = split_by_value(VertexAssignment{std::vector<Point>(g.vertex_count(), 0)});
    return r;
  }
  const SolveResult s = beta_c_exact(signed_graph, options);
  r.beta_c2 = s.beta_c;
  r.deleted_edges = s.contradiction_edges;
  r.residual_bipartition = split_by_value(s.optimal);
  return r;
}

std::vector<EdgeId> min_bipartization_by_deletion(const LabeledGraph& g, std::uint64_t cap) {
  const std::size_t m = g.edge_count();
  std::uint64_t tried = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<EdgeId> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (++tried > cap) throw ResourceLimit("deletion oracle exceeded " + std::to_string(cap) + " subsets");
      std::vector<bool> removed(m, false);
      for (EdgeId e : pick) removed[e] = true;
      if (two_colour(g, [](EdgeId) { return true; }, removed)) return pick;
      // Next k-subset in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("deleting every edge leaves a bipartite graph");
}

void require_latin(const LabeledGraph& g, LatinKind kind) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!latin_index(g.edge(e).label, kind)) {
      throw InvalidInput("edge " + g.name(g.edge(e).from) + "->" + g.name(g.edge(e).to) + " label " +
                         g.edge(e).label.to_string() + " is not in " + std::string(to_string(kind)));
    }
  }
}

CycleClassification classify_cycle_latin(const LabeledGraph& g) {
  if (!is_single_cycle(g)) throw InvalidInput("graph is not a single cycle");
  CycleClassification c;
  c.kind = LatinKind::L;
  try {
    require_latin(g, LatinKind::L);
  } catch (const InvalidInput&) {
    require_latin(g, LatinKind::Lprime);
    c.kind = LatinKind::Lprime;
  }
  const CycleWalk walk = walk_cycle(g);
  const std::size_t n = g.n();
  const std::size_t length = walk.vertices.size();
  c.cycle = walk.vertices;
  c.pi_c = walk.holonomy;
  c.assignment_count = walk.holonomy.fixed_points().size();
  c.verdict = classify_count(c.assignment_count, n);
  const std::size_t count = c.assignment_count;
  if (c.kind == LatinKind::Lprime || length % 2 == 0) {
    c.law_holds = count == 0 || count == n;
  } else if (n % 2 == 1) {
    c.law_holds = count == 1;
  } else {
    c.law_holds = count == 0 || count == 2;
  }
  return c;
}

DirectedLatinReport directed_lprime_classify(const LabeledGraph& g) {
  if (g.mode() != Mode::directed) throw InvalidInput("L' labelings need a directed graph");
  require_simple(g);
  require_latin(g, LatinKind::Lprime);
  DirectedLatinReport r;
  r.law_holds = true;
  bool any_bad = false;
  for (const auto& values : consistent_root_values(g)) {
    r.component_counts.push_back(values.size());
    any_bad = any_bad || values.empty();
    r.law_holds = r.law_holds && (values.empty() || values.size() == g.n());
  }
  r.verdict = any_bad ? Classification::bad : Classification::good;
  return r;
}

std::uint64_t for_each_chordless_cycle(const LabeledGraph& g, const ChordlessCycleOptions& options,
                                       const std::function<bool(const std::vector<VertexId>&)>& visit) {
  const std::size_t nv = g.vertex_count();
  std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
  std::vector<std::vector<VertexId>> nbrs(nv);
  for (const Edge& ed : g.edges()) {
    if (ed.from == ed.to || adj[ed.from][ed.to]) continue;
    adj[ed.from][ed.to] = adj[ed.to][ed.from] = true;
    nbrs[ed.from].push_back(ed.to);
    nbrs[ed.to].push_back(ed.from);
  }
  for (auto& list : nbrs) std::sort(list.begin(), list.end());

  std::uint64_t produced = 0;
  bool stop = false;
  std::vector<VertexId> path;
  std::vector<bool> on_path(nv, false);

  // path[0] is the least vertex; only path.back() may touch the next vertex,
  // except that the final vertex must also touch path[0].
  std::function<void(std::size_t)> grow = [&](std::size_t length) {
    const VertexId start = path.front();
    const VertexId last = path.back();
    const bool closing = path.size() + 1 == length;
    for (VertexId w : nbrs[last]) {
      if (stop) return;
      if (w <= start || on_path[w]) continue;
      bool induced = true;
      for (std::size_t i = 1; i + 1 < path.size() && induced; ++i) induced = !adj[w][path[i]];
      if (!induced) continue;
      if (path.size() >= 2 && adj[w][start] != closing) continue;
      if (closing && w < path[1]) continue;
      path.push_back(w);
      on_path[w] = true;
      if (closing) {
        if (++produced > options.max_cycles) {
          throw ResourceLimit("chordless cycle enumeration exceeded " + std::to_string(options.max_cycles) + " cycles");
        }
        stop = visit(path);
      } else {
        grow(length);
      }
      on_path[w] = false;
      path.pop_back();
    }
  };

  for (std::size_t length = 3; length <= options.max_length && !stop; ++length) {
    for (VertexId s = 0; s < nv && !stop; ++s) {
      path.assign(1, s);
      on_path[s] = true;
      grow(length);
      on_path[s] = false;
    }
  }
  return produced;
}

BipartiteLatinReport bipartite_bad_witness(const LabeledGraph& g, const ChordlessCycleOptions& options) {
  require_simple(g);
  require_latin(g, LatinKind::L);
  const auto props = underlying_properties(g);
  if (!props.bipartite) throw InvalidInput("graph is not bipartite");

  BipartiteLatinReport r;
  r.beta_c_prime = 1;
  for (const auto& values : consistent_root_values(g)) r.beta_c_prime = checked_product(r.beta_c_prime, values.size());
  const auto& [left, right] = *props.bipartition;
  r.complete_bipartite = props.connected && !left.empty() && !right.empty() &&
                         g.edge_count() == left.size() * right.size();
  if (r.beta_c_prime > 0) return r;

  ChordlessCycleOptions scan = options;
  if (r.complete_bipartite) scan.max_length = std::min<std::size_t>(scan.max_length, 4);
  r.cycles_examined = for_each_chordless_cycle(g, scan, [&](const std::vector<VertexId>& cycle) {
    Permutation pi = walk_permutation(g, cycle);
    if (!pi.fixed_points().empty()) return false;
    r.witness = BadCycle{cycle, std::move(pi)};
    return true;
  });
  if (!r.witness) {
    if (r.complete_bipartite || g.vertex_count() <= scan.max_length) {
      throw std::logic_error("bad bipartite Latin labelling without a bad chordless cycle");
    }
    throw ResourceLimit("no bad chordless cycle up to length " + std::to_string(scan.max_length));
  }
  return r;
}

LatinBoundReport nonbipartite_latin_bound(const LabeledGraph& g) {
  if (g.n() < 3) throw InvalidInput("the Latin bound needs n >= 3");
  require_simple(g);
  require_latin(g, LatinKind::L);
  const auto props = underlying_properties(g);
  if (props.bipartite) throw InvalidInput("graph is bipartite");
  if (!props.connected) throw InvalidInput("graph is not connected");
  LatinBoundReport r;
  r.beta_c_prime = beta_c_prime_fast(g);
  r.bound = g.n() % 2 == 1 ? 1 : 2;
  r.holds = r.beta_c_prime <= r.bound;
  return r;
}

}  // namespace permlift
