#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permlift/graph.hpp"
#include "permlift/solve.hpp"

namespace permlift {

/// Induced subgraph on the given vertices. Vertex and edge order follow g;
/// labels are copied verbatim.
LabeledGraph restrict_vertices(const LabeledGraph& g, const std::vector<VertexId>& keep);

/// Spanning subgraph keeping only the listed edges (all vertices stay).
LabeledGraph restrict_edges(const LabeledGraph& g, const std::vector<EdgeId>& keep);

LabeledGraph delete_edge(const LabeledGraph& g, EdgeId e);

enum class ConflictPolicy { prefer_v1, reject };

struct IdentifySpec {
  VertexId v1 = 0;
  VertexId v2 = 0;
  std::string new_name;  // empty: keep v1's name
  ConflictPolicy policy = ConflictPolicy::prefer_v1;
};

enum class DropReason { joins_identified, common_neighbor };

struct DroppedEdge {
  EdgeId edge;  // id in the source graph
  DropReason reason;
  std::optional<EdgeId> kept;  // for common_neighbor: the source edge that survived
};

struct IdentifyResult {
  LabeledGraph graph;
  VertexId merged = 0;              // id of the new vertex in graph
  std::vector<EdgeId> origin;       // per edge of graph: its source edge
  std::vector<DroppedEdge> dropped;
};

/// The merged vertex takes v1's position and v2 disappears. Edges keep their
/// orientation with v substituted. When a neighbor u is adjacent to both,
/// prefer_v1 keeps the v1 edge; reject throws InvalidInput unless the two
/// labels read from u toward v coincide, in which case the v2 edge is
/// dropped as redundant.
IdentifyResult identify(const LabeledGraph& g, const IdentifySpec& spec);

/// Contradiction number with the convention that an edgeless graph has none.
std::size_t min_contradictions(const LabeledGraph& g, const SolveOptions& options = {});

struct SharedValueCheck {
  std::vector<Point> values_v1;      // extendable values at v1 in its component
  std::vector<Point> values_v2;
  std::vector<Point> shared;         // intersection
  std::uint64_t beta_prime_first = 0;   // consistent assignments of v1's component
  std::uint64_t beta_prime_second = 0;  // ... of v2's component
  std::uint64_t beta_prime_merged = 0;  // ... of the merged component of H
  std::size_t beta_c_merged = 0;
  bool lower_holds = false;     // first + second - n <= merged
  bool upper_holds = false;     // merged <= min(first, second)
  bool intersection_holds = false;  // merged == |shared|
  bool pigeonhole_applies = false;   // first + second > n
  bool pigeonhole_holds = true;      // applies => beta_c_merged == 0
};

struct IdentifyBounds {
  std::size_t beta_c_g = 0;
  std::size_t beta_c_h = 0;
  std::size_t min_degree = 0;
  std::size_t dropped = 0;
  bool same_component = false;
  /// beta_c(G) - 1 <= beta_c(H). Only evaluated when at most one edge is
  /// dropped; with more drops the inequality can fail.
  std::optional<bool> lower_holds;
  /// beta_c(G) - dropped <= beta_c(H), always valid.
  bool lower_by_dropped_holds = false;
  /// beta_c(H) <= beta_c(G) + min degree.
  bool upper_holds = false;
  /// Present when v1 and v2 lie in different components.
  std::optional<SharedValueCheck> shared;

  bool all_hold() const;
};

IdentifyBounds check_identify_bounds(const LabeledGraph& g, const IdentifySpec& spec,
                                     const SolveOptions& options = {});

}  // namespace permlift
