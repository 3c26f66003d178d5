#pragma once

#include <string>
#include <vector>

#include "permlift/equiv.hpp"
#include "permlift/generate.hpp"
#include "permlift/graph.hpp"
#include "permlift/perm.hpp"

namespace fixtures {

using namespace permlift;

inline Permutation perm(std::size_t n, const std::string& text) { return parse_perm(text, n); }

inline LabeledGraph with_names(std::size_t n, std::size_t vertices, Mode mode = Mode::undirected) {
  LabeledGraph g(n, mode);
  for (std::size_t v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
  return g;
}

// The 4-cycle v0 -> v1 -> v2 -> v3 -> v0 over n = 3 with no consistent assignment.
inline LabeledGraph no_assignment_c4() {
  LabeledGraph g = with_names(3, 4);
  g.add_edge(0, 1, perm(3, "(0 2)"));
  g.add_edge(1, 2, perm(3, "(0 1)"));
  g.add_edge(2, 3, perm(3, "(1 2)"));
  g.add_edge(3, 0, perm(3, "(1 2)"));
  return g;
}

// v0 -> v1 -> ... -> v_{t-1} -> v0 with the given labels.
inline LabeledGraph cycle(const std::vector<Permutation>& labels, Mode mode = Mode::undirected) {
  const std::size_t t = labels.size();
  LabeledGraph g = with_names(labels.front().degree(), t, mode);
  for (std::size_t i = 0; i < t; ++i) g.add_edge(i, (i + 1) % t, labels[i]);
  return g;
}

inline LabeledGraph path(const std::vector<Permutation>& labels) {
  LabeledGraph g = with_names(labels.front().degree(), labels.size() + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) g.add_edge(i, i + 1, labels[i]);
  return g;
}

inline LabeledGraph complete(std::size_t vertices, const Permutation& label) {
  LabeledGraph g = with_names(label.degree(), vertices);
  for (VertexId a = 0; a < vertices; ++a) {
    for (VertexId b = a + 1; b < vertices; ++b) g.add_edge(a, b, label);
  }
  return g;
}

inline LabeledGraph identity_labels(const LabeledGraph& shape, std::size_t n) {
  LabeledGraph g(n, shape.mode());
  for (const auto& name : shape.vertex_names()) g.add_vertex(name);
  for (const auto& e : shape.edges()) g.add_edge(e.from, e.to, Permutation::identity(n));
  return g;
}

// Random spanning tree plus each remaining pair with probability `extra`,
// arbitrary labels from S_n, random orientation.
inline LabeledGraph random_connected(Rng& rng, std::size_t vertices, std::size_t n, double extra,
                                     Mode mode = Mode::directed) {
  LabeledGraph g = with_names(n, vertices, mode);
  std::vector<std::vector<bool>> used(vertices, std::vector<bool>(vertices, false));
  auto add = [&](VertexId a, VertexId b) {
    used[a][b] = used[b][a] = true;
    if (rng.below(2)) std::swap(a, b);
    g.add_edge(a, b, random_permutation(n, rng));
  };
  for (VertexId b = 1; b < vertices; ++b) add(rng.below(b), b);
  for (VertexId a = 0; a < vertices; ++a) {
    for (VertexId b = a + 1; b < vertices; ++b) {
      if (!used[a][b] && rng.unit() < extra) add(a, b);
    }
  }
  return g;
}

// Same graph with vertex positions permuted by `order` (new position i holds old vertex order[i]).
inline LabeledGraph reorder(const LabeledGraph& g, const std::vector<VertexId>& order) {
  std::vector<VertexId> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  LabeledGraph out(g.n(), g.mode());
  for (VertexId old : order) out.add_vertex(g.name(old));
  for (const auto& e : g.edges()) out.add_edge(position[e.from], position[e.to], e.label);
  return out;
}

// A random sequence of 1..5 switches and reversals.
inline LabeledGraph random_moves(const LabeledGraph& g, Rng& rng) {
  LabeledGraph out = g;
  const std::size_t moves = 1 + rng.below(5);
  for (std::size_t i = 0; i < moves; ++i) {
    if (out.edge_count() > 0 && rng.below(3) == 0) {
      out = reverse_edge(out, rng.below(out.edge_count()));
    } else {
      out = switch_vertex(out, SwitchOp{rng.below(out.vertex_count()), random_permutation(out.n(), rng)});
    }
  }
  return out;
}

}  // namespace fixtures
