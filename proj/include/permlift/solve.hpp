#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "permlift/graph.hpp"

namespace permlift {

enum class SolveMethod { closed_form_tree, closed_form_cycle, propagate, lift, branch_and_bound, brute_force };

std::string_view to_string(SolveMethod m);

struct SolveOptions {
  std::uint64_t brute_force_cap = 10'000'000;  // max n^|V| enumerated
  std::uint64_t node_cap = 100'000'000;        // max branch-and-bound node visits
  unsigned threads = 1;
};

struct SolveResult {
  std::size_t beta_c = 0;
  /// Consistent assignments of the whole graph (product over components).
  std::uint64_t beta_c_prime = 0;
  /// Consistent assignments per connected component, ordered as in
  /// underlying_properties().components.
  std::vector<std::uint64_t> component_beta_c_prime;
  /// Absent for an edgeless graph.
  std::optional<Rational> omega;
  /// Lexicographically least assignment achieving beta_c.
  VertexAssignment optimal;
  std::vector<EdgeId> contradiction_edges;
  SolveMethod method = SolveMethod::brute_force;
};

/// Full enumeration of [n]^V. Independent of every other solver here.
struct OracleReport {
  std::size_t beta_c = 0;
  std::uint64_t beta_c_prime = 0;
  std::vector<VertexAssignment> all_optimal;  // lexicographic order
  std::uint64_t enumerated = 0;
};

/// Throws ResourceLimit when n^|V| exceeds cap.
OracleReport brute_force(const LabeledGraph& g, std::uint64_t cap = 10'000'000);

/// Values t such that some consistent assignment of v's component has k(v) = t.
std::vector<Point> extendable_values(const LabeledGraph& g, VertexId v);

/// Per component (ordered by least vertex): the consistent root values of
/// its least vertex. Each value extends to exactly one consistent assignment.
std::vector<std::vector<Point>> consistent_root_values(const LabeledGraph& g);

/// Number of consistent assignments of a connected graph, by root
/// propagation along a spanning tree. InvalidInput if disconnected.
std::uint64_t beta_c_prime_fast(const LabeledGraph& g);

/// All consistent assignments of a connected graph, sorted.
std::vector<VertexAssignment> consistent_assignments(const LabeledGraph& g);

/// The unique consistent assignment of a connected graph with k(root) = value,
/// if there is one.
std::optional<VertexAssignment> propagate_from(const LabeledGraph& g, VertexId root, Point value);

/// Exact beta_c by branch and bound, then the lexicographically least
/// optimum by prefix-fixing feasibility searches.
SolveResult beta_c_exact(const LabeledGraph& g, const SolveOptions& options = {});

/// Single cycle traversed from vertex 0 through its lower-numbered incident
/// edge. holonomy = p_t ∘ ... ∘ p_1 where p_i is the i-th edge label read in
/// the traversal direction, so k(v0) must be a fixed point of it.
struct CycleWalk {
  std::vector<VertexId> vertices;  // v0 .. v_{t-1}
  std::vector<EdgeId> edges;       // edges[i] joins vertices[i] and vertices[(i+1) % t]
  Permutation holonomy;
};

CycleWalk walk_cycle(const LabeledGraph& g);

/// Composite permutation around a closed walk given as a vertex sequence
/// (the closing edge back to the first vertex is implied). Uses the
/// lowest-numbered edge between consecutive vertices.
Permutation walk_permutation(const LabeledGraph& g, const std::vector<VertexId>& closed_walk);

/// InvalidInput unless the underlying graph is a single cycle.
SolveResult cycle_closed_form(const LabeledGraph& g);

/// InvalidInput unless the underlying graph is a forest.
SolveResult tree_closed_form(const LabeledGraph& g);

/// Dispatcher: forest -> tree closed form, single cycle -> cycle closed
/// form, every component vertex-proper -> propagation, else branch and bound.
/// InvalidInput for structurally invalid graphs. An edgeless graph is a
/// forest: beta_c = 0 and omega is absent.
SolveResult solve(const LabeledGraph& g, const SolveOptions& options = {});

}  // namespace permlift
