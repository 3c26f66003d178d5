#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "permlift/graph.hpp"
#include "permlift/lift.hpp"

namespace permlift {

/// s(v, sigma): edges into v become sigma ∘ pi, edges out of v become
/// pi ∘ sigma^-1.
struct SwitchOp {
  VertexId vertex = 0;
  Permutation sigma;
};

LabeledGraph switch_vertex(const LabeledGraph& g, const SwitchOp& op);

/// Swaps the endpoints of edge e and inverts its label. The edge keeps its id.
LabeledGraph reverse_edge(const LabeledGraph& g, EdgeId e);

/// How (G1, K1) turns into (G2, K2): reverse the listed G1 edges, switch
/// every vertex v by sigma[v], then rename v to iso[v].
struct EquivalenceWitness {
  std::vector<VertexId> iso;        // G1 vertex -> G2 vertex
  std::vector<Permutation> sigma;   // per G1 vertex
  std::vector<EdgeId> reversed;     // G1 edge ids, ascending
  std::vector<EdgeId> edge_map;     // G1 edge -> matching G2 edge
};

/// Applies a witness to g1. The result has g2's vertex order and g1's edge order.
LabeledGraph apply_witness(const LabeledGraph& g1, const EquivalenceWitness& w, const LabeledGraph& g2);

/// Same n, mode, vertex names in the same order, and the same set of
/// oriented labeled edges regardless of edge order.
bool same_labeled_graph(const LabeledGraph& a, const LabeledGraph& b);

struct EquivOptions {
  std::size_t max_vertices = 10;
  std::uint64_t node_cap = 10'000'000;
};

/// Searches underlying isomorphisms f in lexicographic order and, for each,
/// the lexicographically least switch at each component root, with every
/// other switch forced along a spanning tree. Returns the first witness.
/// InvalidInput on n mismatch or parallel underlying edges; ResourceLimit
/// past the caps.
std::optional<EquivalenceWitness> are_equivalent(const LabeledGraph& g1, const LabeledGraph& g2,
                                                 const EquivOptions& options = {});

/// Lift vertex map (i, j) -> (iso[i], sigma_i(j)), indexed by g1's dense lift index.
struct LiftIsomorphism {
  std::vector<LiftVertex> image;
};

/// Builds the map and checks that it is a fiber-preserving isomorphism
/// K1G1 -> K2G2; failure is a std::logic_error.
LiftIsomorphism witness_to_lift_isomorphism(const EquivalenceWitness& w, const LabeledGraph& g1,
                                            const LabeledGraph& g2);

/// Bijective, fibers onto fibers, lift edges onto lift edges.
bool verify_lift_isomorphism(const LiftIsomorphism& map, const LiftGraph& lift1, const LiftGraph& lift2);

}  // namespace permlift
