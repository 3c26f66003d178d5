#include "permlift/equiv.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "permlift/errors.hpp"

namespace permlift {

namespace {

LabeledGraph with_vertices_of(const LabeledGraph& g) {
  LabeledGraph out(g.n(), g.mode());
  for (const auto& name : g.vertex_names()) out.add_vertex(name);
  return out;
}

void require_degree(const LabeledGraph& g, const Permutation& p) {
  if (p.degree() != g.n()) throw InvalidInput("switch permutation degree does not match n");
}

// adjacency[u * nv + v] = edge joining u and v, or npos.
constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::vector<std::size_t> adjacency_matrix(const LabeledGraph& g) {
  const std::size_t nv = g.vertex_count();
  std::vector<std::size_t> adj(nv * nv, npos);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (adj[ed.from * nv + ed.to] != npos) {
      throw InvalidInput("equivalence testing needs a simple underlying graph; " + g.name(ed.from) + " and " +
                         g.name(ed.to) + " are joined twice");
    }
    adj[ed.from * nv + ed.to] = e;
    adj[ed.to * nv + ed.from] = e;
  }
  return adj;
}

class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}
  void charge() {
    if (++used_ > cap_) throw ResourceLimit("equivalence search node cap of " + std::to_string(cap_) + " exceeded");
  }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

struct Conjugacy {
  Permutation x, x_inv, y, y_inv;
};

// Lexicographically least sigma with sigma ∘ X = Y ∘ sigma for every pair.
// Points are decided in increasing order; each choice is closed under the
// constraints before branching further.
std::optional<Permutation> least_conjugator(std::size_t n, const std::vector<Conjugacy>& constraints,
                                            Budget& budget) {
  struct State {
    std::vector<int> img;
    std::vector<bool> used;
  };

  auto assign = [&](State& s, Point x0, Point y0) {
    std::vector<std::pair<Point, Point>> work{{x0, y0}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      if (s.img[x] == static_cast<int>(y)) continue;
      if (s.img[x] != -1 || s.used[y]) return false;
      s.img[x] = static_cast<int>(y);
      s.used[y] = true;
      for (const auto& c : constraints) {
        work.emplace_back(c.x(x), c.y(y));
        work.emplace_back(c.x_inv(x), c.y_inv(y));
      }
    }
    return true;
  };

  std::function<std::optional<Permutation>(const State&)> search = [&](const State& s) -> std::optional<Permutation> {
    std::size_t x = 0;
    while (x < n && s.img[x] != -1) ++x;
    if (x == n) {
      std::vector<Point> image(n);
      for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Point>(s.img[i]);
      return Permutation(std::move(image));
    }
    for (Point y = 0; y < n; ++y) {
      if (s.used[y]) continue;
      budget.charge();
      State next = s;
      if (!assign(next, static_cast<Point>(x), y)) continue;
      if (auto found = search(next)) return found;
    }
    return std::nullopt;
  };

  return search(State{std::vector<int>(n, -1), std::vector<bool>(n, false)});
}

struct TreeEdge {
  VertexId parent;
  VertexId child;
  EdgeId edge;
};

struct ComponentPlan {
  VertexId root;
  std::vector<TreeEdge> tree;  // BFS order
  std::vector<EdgeId> chords;  // non-tree edges
};

std::vector<ComponentPlan> plan_components(const LabeledGraph& g) {
  std::vector<ComponentPlan> plans;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<bool> tree_edge(g.edge_count(), false);
  for (const auto& comp : underlying_properties(g).components) {
    ComponentPlan plan{comp.front(), {}, {}};
    std::vector<VertexId> queue{plan.root};
    seen[plan.root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (EdgeId e : g.incident(u)) {
        const VertexId w = g.other_end(e, u);
        if (!seen[w]) {
          seen[w] = true;
          tree_edge[e] = true;
          plan.tree.push_back({u, w, e});
          queue.push_back(w);
        }
      }
    }
    for (VertexId v : comp) {
      for (EdgeId e : g.incident(v)) {
        if (!tree_edge[e] && g.edge(e).from == v) plan.chords.push_back(e);
      }
    }
    std::sort(plan.chords.begin(), plan.chords.end());
    plans.push_back(std::move(plan));
  }
  return plans;
}

}  // namespace

LabeledGraph switch_vertex(const LabeledGraph& g, const SwitchOp& op) {
  if (op.vertex >= g.vertex_count()) throw InvalidInput("switch at unknown vertex");
  require_degree(g, op.sigma);
  const Permutation sigma_inv = op.sigma.inverse();
  LabeledGraph out = with_vertices_of(g);
  for (const Edge& ed : g.edges()) {
    Permutation label = ed.label;
    if (ed.to == op.vertex) label = compose(op.sigma, label);
    if (ed.from == op.vertex) label = compose(label, sigma_inv);
    out.add_edge(ed.from, ed.to, std::move(label));
  }
  return out;
}

LabeledGraph reverse_edge(const LabeledGraph& g, EdgeId e) {
  if (e >= g.edge_count()) throw InvalidInput("edge index out of range");
  LabeledGraph out = with_vertices_of(g);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& ed = g.edge(i);
    if (i == e) {
      out.add_edge(ed.to, ed.from, ed.label.inverse());
    } else {
      out.add_edge(ed.from, ed.to, ed.label);
    }
  }
  return out;
}

LabeledGraph apply_witness(const LabeledGraph& g1, const EquivalenceWitness& w, const LabeledGraph& g2) {
  if (w.iso.size() != g1.vertex_count() || w.sigma.size() != g1.vertex_count()) {
    throw InvalidInput("witness does not cover every vertex");
  }
  std::vector<bool> flip(g1.edge_count(), false);
  for (EdgeId e : w.reversed) flip.at(e) = true;
  LabeledGraph out = with_vertices_of(g2);
  for (EdgeId e = 0; e < g1.edge_count(); ++e) {
    const Edge& ed = g1.edge(e);
    VertexId from = ed.from;
    VertexId to = ed.to;
    Permutation label = ed.label;
    if (flip[e]) {
      std::swap(from, to);
      label = label.inverse();
    }
    label = compose(compose(w.sigma[to], label), w.sigma[from].inverse());
    out.add_edge(w.iso[from], w.iso[to], std::move(label));
  }
  return out;
}

bool same_labeled_graph(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.n() != b.n() || a.mode() != b.mode() || a.vertex_names() != b.vertex_names()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  auto keyed = [](const LabeledGraph& g) {
    std::vector<std::tuple<VertexId, VertexId, Permutation>> out;
    for (const Edge& ed : g.edges()) out.emplace_back(ed.from, ed.to, ed.label);
    std::sort(out.begin(), out.end());
    return out;
  };
  return keyed(a) == keyed(b);
}

std::optional<EquivalenceWitness> are_equivalent(const LabeledGraph& g1, const LabeledGraph& g2,
                                                 const EquivOptions& options) {
  if (g1.n() != g2.n()) throw InvalidInput("labeled graphs use different alphabet sizes");
  require_simple(g1);
  require_simple(g2);
  const auto adj1 = adjacency_matrix(g1);
  const auto adj2 = adjacency_matrix(g2);
  const std::size_t nv = g1.vertex_count();
  if (nv > options.max_vertices || g2.vertex_count() > options.max_vertices) {
    throw ResourceLimit("equivalence testing is capped at " + std::to_string(options.max_vertices) + " vertices");
  }
  if (nv != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  auto degrees = [](const LabeledGraph& g) {
    std::vector<std::size_t> d;
    for (VertexId v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g1) != degrees(g2)) return std::nullopt;

  const std::size_t n = g1.n();
  const auto plans = plan_components(g1);
  Budget budget(options.node_cap);

  // For a complete underlying isomorphism f, derive the switches or fail.
  auto switches_for = [&](const std::vector<VertexId>& f) -> std::optional<std::vector<Permutation>> {
    std::vector<Permutation> sigma(nv, Permutation::identity(n));
    for (const ComponentPlan& plan : plans) {
      // sigma_v = left[v] ∘ sigma_root ∘ right[v]
      std::vector<Permutation> left(nv, Permutation::identity(n));
      std::vector<Permutation> right(nv, Permutation::identity(n));
      for (const TreeEdge& te : plan.tree) {
        const Permutation pi = g1.label_from(te.edge, te.parent);
        const EdgeId e2 = adj2[f[te.parent] * nv + f[te.child]];
        const Permutation rho = g2.label_from(e2, f[te.parent]);
        left[te.child] = compose(rho, left[te.parent]);
        right[te.child] = compose(right[te.parent], pi.inverse());
      }
      std::vector<Conjugacy> constraints;
      for (EdgeId e : plan.chords) {
        const Edge& ed = g1.edge(e);
        const EdgeId e2 = adj2[f[ed.from] * nv + f[ed.to]];
        const Permutation rho = g2.label_from(e2, f[ed.from]);
        Permutation x = compose(compose(right[ed.to], ed.label), right[ed.from].inverse());
        Permutation y = compose(compose(left[ed.to].inverse(), rho), left[ed.from]);
        Permutation x_inv = x.inverse();
        Permutation y_inv = y.inverse();
        constraints.push_back({std::move(x), std::move(x_inv), std::move(y), std::move(y_inv)});
      }
      const auto root_sigma = least_conjugator(n, constraints, budget);
      if (!root_sigma) return std::nullopt;
      sigma[plan.root] = *root_sigma;
      for (const TreeEdge& te : plan.tree) {
        sigma[te.child] = compose(compose(left[te.child], *root_sigma), right[te.child]);
      }
    }
    return sigma;
  };

  std::vector<VertexId> f(nv, npos);
  std::vector<bool> used(nv, false);
  std::optional<EquivalenceWitness> result;

  std::function<bool(VertexId)> extend = [&](VertexId v) -> bool {
    if (v == nv) {
      auto sigma = switches_for(f);
      if (!sigma) return false;
      EquivalenceWitness w{f, std::move(*sigma), {}, std::vector<EdgeId>(g1.edge_count())};
      for (EdgeId e = 0; e < g1.edge_count(); ++e) {
        const Edge& ed = g1.edge(e);
        const EdgeId e2 = adj2[f[ed.from] * nv + f[ed.to]];
        w.edge_map[e] = e2;
        if (g2.edge(e2).from != f[ed.from]) w.reversed.push_back(e);
      }
      result = std::move(w);
      return true;
    }
    for (VertexId u = 0; u < nv; ++u) {
      if (used[u] || g1.degree(v) != g2.degree(u)) continue;
      budget.charge();
      bool fits = true;
      for (VertexId w = 0; w < v && fits; ++w) {
        fits = (adj1[v * nv + w] == npos) == (adj2[u * nv + f[w]] == npos);
      }
      if (!fits) continue;
      f[v] = u;
      used[u] = true;
      if (extend(v + 1)) return true;
      used[u] = false;
      f[v] = npos;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  if (!same_labeled_graph(apply_witness(g1, *result, g2), g2)) {
    throw std::logic_error("equivalence witness does not reproduce the target graph");
  }
  return result;
}

LiftIsomorphism witness_to_lift_isomorphism(const EquivalenceWitness& w, const LabeledGraph& g1,
                                            const LabeledGraph& g2) {
  const std::size_t n = g1.n();
  if (w.iso.size() != g1.vertex_count() || w.sigma.size() != g1.vertex_count()) {
    throw InvalidInput("witness does not cover every vertex");
  }
  LiftIsomorphism map;
  map.image.reserve(g1.vertex_count() * n);
  for (VertexId i = 0; i < g1.vertex_count(); ++i) {
    for (Point j = 0; j < n; ++j) map.image.push_back(LiftVertex{w.iso[i], w.sigma[i](j)});
  }
  if (!verify_lift_isomorphism(map, build_lift(g1), build_lift(g2))) {
    throw std::logic_error("witness does not induce a fiber-preserving lift isomorphism");
  }
  return map;
}

bool verify_lift_isomorphism(const LiftIsomorphism& map, const LiftGraph& lift1, const LiftGraph& lift2) {
  const std::size_t n = lift1.n();
  if (n != lift2.n() || map.image.size() != lift1.vertex_count() || lift1.vertex_count() != lift2.vertex_count()) {
    return false;
  }
  std::vector<bool> hit(lift2.vertex_count(), false);
  for (std::size_t idx = 0; idx < map.image.size(); ++idx) {
    const LiftVertex target = map.image[idx];
    if (target.base >= lift2.base.vertex_count() || target.value >= n) return false;
    const std::size_t t = lift2.index(target);
    if (hit[t]) return false;
    hit[t] = true;
    // Fibers onto fibers: the base of the image depends only on the source fiber.
    if (target.base != map.image[lift1.vertex_at(idx).base * n].base) return false;
  }
  auto pair_of = [](std::size_t a, std::size_t b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
  std::set<std::pair<std::size_t, std::size_t>> target_edges;
  for (const LiftEdge& le : lift2.edges) target_edges.insert(pair_of(lift2.index(le.a), lift2.index(le.b)));
  std::set<std::pair<std::size_t, std::size_t>> mapped;
  for (const LiftEdge& le : lift1.edges) {
    mapped.insert(pair_of(lift2.index(map.image[lift1.index(le.a)]), lift2.index(map.image[lift1.index(le.b)])));
  }
  return mapped == target_edges;
}

}  // namespace permlift
