#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permlift/perm.hpp"

namespace permlift {

using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class Mode { undirected, directed };

std::string_view to_string(Mode mode);

/// Constraint label(k(from)) == k(to). Traversing the edge backwards uses
/// the inverse label, in both modes.
struct Edge {
  VertexId from = 0;
  VertexId to = 0;
  Permutation label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A graph G with edge labeling K into S_n.
///
/// Built incrementally, then treated as an immutable value: every
/// transformation elsewhere in the library returns a new graph. Vertex ids
/// are dense indices in insertion order. Structural problems (self-loops,
/// duplicate edges) are accepted on construction and reported by validate();
/// the solvers refuse such graphs.
class LabeledGraph {
 public:
  explicit LabeledGraph(std::size_t n, Mode mode = Mode::undirected);

  std::size_t n() const noexcept { return n_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws InvalidInput when the name is unknown.
  VertexId vertex(std::string_view name) const;

  /// Throws InvalidInput on a duplicate name.
  VertexId add_vertex(std::string name);
  /// Throws InvalidInput on unknown endpoints or a label of the wrong degree.
  EdgeId add_edge(VertexId from, VertexId to, Permutation label);
  EdgeId add_edge(std::string_view from, std::string_view to, Permutation label);

  /// Edge ids incident to v, in increasing order.
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_.at(v); }
  std::size_t degree(VertexId v) const { return incident_.at(v).size(); }
  /// The endpoint of e that is not v.
  VertexId other_end(EdgeId e, VertexId v) const;
  /// Label of e read in the direction leaving v.
  Permutation label_from(EdgeId e, VertexId v) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.mode_ == b.mode_ && a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  Mode mode_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::unordered_map<std::string, VertexId> index_;
};

/// Strategy k : V -> [n], indexed by vertex id.
struct VertexAssignment {
  std::vector<Point> values;

  std::size_t size() const noexcept { return values.size(); }
  Point operator[](VertexId v) const { return values[v]; }
  Point& operator[](VertexId v) { return values[v]; }

  friend bool operator==(const VertexAssignment&, const VertexAssignment&) = default;
  friend auto operator<=>(const VertexAssignment&, const VertexAssignment&) = default;
};

/// Exact non-negative fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct GameValueReport {
  std::size_t beta_c = 0;
  std::size_t edge_count = 0;
  Rational omega;
};

/// Edges violated by k, in increasing id order.
std::vector<EdgeId> contradictions(const LabeledGraph& g, const VertexAssignment& k);
bool is_consistent(const LabeledGraph& g, const VertexAssignment& k);

/// omega = 1 - beta_c / |E|. Throws InvalidInput for an edgeless graph or
/// beta_c > |E|.
GameValueReport game_value(const LabeledGraph& g, std::size_t beta_c);

enum class ViolationKind { self_loop, duplicate_edge, non_involution };

struct Violation {
  ViolationKind kind;
  EdgeId edge;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// One entry per broken invariant. Empty iff the graph is well formed.
std::vector<Violation> validate(const LabeledGraph& g);

/// Throws InvalidInput on self-loops or duplicate edges. Non-involution
/// labels in undirected mode are allowed here: the orientation is explicit.
void require_simple(const LabeledGraph& g);

struct UnderlyingProperties {
  bool connected = true;
  bool bipartite = true;
  /// Present iff bipartite. The side holding each component's least vertex
  /// comes first.
  std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> bipartition;
  /// Sorted vertex lists, ordered by least vertex.
  std::vector<std::vector<VertexId>> components;
};

UnderlyingProperties underlying_properties(const LabeledGraph& g);

/// Component index of every vertex, numbered as in underlying_properties().
std::vector<std::size_t> component_of(const LabeledGraph& g);

bool is_forest(const LabeledGraph& g);
/// Connected, every vertex of degree 2, |E| == |V| >= 2.
bool is_single_cycle(const LabeledGraph& g);

}  // namespace permlift
