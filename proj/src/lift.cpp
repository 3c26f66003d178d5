#include "permlift/lift.hpp"

#include <algorithm>
#include <stdexcept>

#include "permlift/errors.hpp"
#include "permlift/union_find.hpp"

namespace permlift {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::good:
      return "good";
    case Classification::bad:
      return "bad";
    case Classification::ugly:
      return "ugly";
  }
  return "?";
}

Classification classify_count(std::size_t count, std::size_t n) {
  if (count == 0) return Classification::bad;
  if (count == n) return Classification::good;
  return Classification::ugly;
}

LiftGraph build_lift(const LabeledGraph& g) {
  require_simple(g);
  LiftGraph lift{g, {}};
  const std::size_t n = g.n();
  lift.edges.reserve(g.edge_count() * n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    for (Point j = 0; j < n; ++j) {
      lift.edges.push_back(LiftEdge{{ed.from, j}, {ed.to, ed.label(j)}, e});
    }
  }
  if (!fiber_degree_ok(lift)) throw std::logic_error("lift violates the fiber-degree property");
  return lift;
}

bool fiber_degree_ok(const LiftGraph& lift) {
  const LabeledGraph& g = lift.base;
  const std::size_t n = g.n();
  if (lift.edges.size() != g.edge_count() * n) return false;
  // hits[e][end * n + j]: lift edges of base edge e touching (endpoint, j).
  std::vector<std::vector<unsigned>> hits(g.edge_count(), std::vector<unsigned>(2 * n, 0));
  for (const LiftEdge& le : lift.edges) {
    if (le.base_edge >= g.edge_count()) return false;
    const Edge& ed = g.edge(le.base_edge);
    if (le.a.base != ed.from || le.b.base != ed.to) return false;
    if (le.a.value >= n || le.b.value >= n) return false;
    ++hits[le.base_edge][le.a.value];
    ++hits[le.base_edge][n + le.b.value];
  }
  for (const auto& row : hits) {
    if (std::any_of(row.begin(), row.end(), [](unsigned c) { return c != 1; })) return false;
  }
  return true;
}

bool lift_self_labeling_check(const LiftGraph& lift) {
  const LabeledGraph& g = lift.base;
  for (const LiftEdge& le : lift.edges) {
    if (le.base_edge >= g.edge_count()) return false;
    // k'(v_ij) = j, so the constraint reads K(e)(a.value) == b.value.
    if (g.edge(le.base_edge).label(le.a.value) != le.b.value) return false;
  }
  return true;
}

ComponentSummary component_analysis(const LiftGraph& lift) {
  const LabeledGraph& g = lift.base;
  const std::size_t n = g.n();
  const std::size_t nv = g.vertex_count();

  UnionFind uf(lift.vertex_count());
  for (const LiftEdge& le : lift.edges) uf.unite(lift.index(le.a), lift.index(le.b));

  ComponentSummary summary;
  for (const auto& group : uf.groups()) {
    LiftComponent comp;
    comp.fiber_counts.assign(nv, 0);
    comp.vertices.reserve(group.size());
    for (std::size_t idx : group) {
      const LiftVertex v = lift.vertex_at(idx);
      comp.vertices.push_back(v);
      ++comp.fiber_counts[v.base];
    }
    if (comp.vertices.size() == nv) ++summary.isomorphic_to_base_count;
    summary.components.push_back(std::move(comp));
  }

  const auto props = underlying_properties(g);
  const auto base_comp = component_of(g);
  for (const auto& members : props.components) {
    BaseComponentSummary bc;
    bc.base_vertices = members;
    const std::size_t id = base_comp[members.front()];
    for (const LiftComponent& comp : summary.components) {
      if (base_comp[comp.vertices.front().base] == id && comp.vertices.size() == members.size()) {
        ++bc.isomorphic_count;
      }
    }
    bc.classification = classify_count(bc.isomorphic_count, n);
    summary.per_base_component.push_back(std::move(bc));
  }
  if (props.connected) summary.classification = classify_count(summary.isomorphic_to_base_count, n);
  return summary;
}

std::vector<VertexAssignment> consistent_assignments_from_components(const LiftGraph& lift) {
  const LabeledGraph& g = lift.base;
  if (!underlying_properties(g).connected) {
    throw InvalidInput("assignments from lift components require a connected base graph");
  }
  const auto summary = component_analysis(lift);
  std::vector<VertexAssignment> out;
  for (const LiftComponent& comp : summary.components) {
    if (comp.vertices.size() != g.vertex_count()) continue;
    VertexAssignment k{std::vector<Point>(g.vertex_count(), 0)};
    for (const LiftVertex& v : comp.vertices) k[v.base] = v.value;
    // The component must copy G: one vertex per fiber, edges over every
    // base edge. That is exactly consistency of the read-off assignment.
    if (!is_consistent(g, k)) throw std::logic_error("size-|V| lift component is not a copy of the base graph");
    out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permlift
