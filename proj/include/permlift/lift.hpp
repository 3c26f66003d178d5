#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "permlift/graph.hpp"

namespace permlift {

/// Vertex (i, j) of KG: base vertex i, fiber value j.
struct LiftVertex {
  VertexId base = 0;
  Point value = 0;

  friend bool operator==(const LiftVertex&, const LiftVertex&) = default;
  friend auto operator<=>(const LiftVertex&, const LiftVertex&) = default;
};

/// (i, j) -- (s, label(j)) for base edge i -> s.
struct LiftEdge {
  LiftVertex a;
  LiftVertex b;
  EdgeId base_edge = 0;
};

/// The permutation graph KG. Lift vertex (i, j) has dense index i * n + j,
/// so fiber V_i occupies the index range [i * n, (i + 1) * n). Edges are
/// generated base edge by base edge, in fiber-value order.
struct LiftGraph {
  LabeledGraph base;
  std::vector<LiftEdge> edges;

  std::size_t n() const noexcept { return base.n(); }
  std::size_t vertex_count() const noexcept { return base.vertex_count() * base.n(); }
  std::size_t index(LiftVertex v) const noexcept { return v.base * base.n() + v.value; }
  LiftVertex vertex_at(std::size_t index) const noexcept {
    return LiftVertex{index / base.n(), static_cast<Point>(index % base.n())};
  }
};

/// Builds KG and checks the fiber-degree property; a failure there is an
/// internal error (std::logic_error).
LiftGraph build_lift(const LabeledGraph& g);

/// Every lift vertex has, towards each base edge at its base vertex, exactly
/// one lift neighbor, which lies in the other endpoint's fiber.
bool fiber_degree_ok(const LiftGraph& lift);

/// Labels each lift edge with its base edge's permutation and checks that
/// k'(i, j) = j is consistent. True on every correctly built lift.
bool lift_self_labeling_check(const LiftGraph& lift);

enum class Classification { good, bad, ugly };

std::string_view to_string(Classification c);

/// good iff count == n, bad iff count == 0.
Classification classify_count(std::size_t count, std::size_t n);

struct LiftComponent {
  std::vector<LiftVertex> vertices;          // sorted by (i, j)
  std::vector<std::size_t> fiber_counts;     // |V_i ∩ component| per base vertex
};

/// Analysis restricted to one connected component of the base graph.
struct BaseComponentSummary {
  std::vector<VertexId> base_vertices;
  /// Lift components with exactly |base_vertices| vertices; each is a copy
  /// of the base component.
  std::size_t isomorphic_count = 0;
  Classification classification = Classification::bad;
};

struct ComponentSummary {
  /// Ordered by least lift vertex.
  std::vector<LiftComponent> components;
  /// Number of lift components with exactly |V(G)| vertices.
  std::size_t isomorphic_to_base_count = 0;
  /// Present only for a connected base graph.
  std::optional<Classification> classification;
  std::vector<BaseComponentSummary> per_base_component;
};

ComponentSummary component_analysis(const LiftGraph& lift);

/// One assignment per lift component that copies the base graph, reading
/// k(v_i) off the component's vertex in fiber V_i. Sorted. Requires a
/// connected base (InvalidInput otherwise).
std::vector<VertexAssignment> consistent_assignments_from_components(const LiftGraph& lift);

}  // namespace permlift
