#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "permlift/graph.hpp"
#include "permlift/lift.hpp"
#include "permlift/solve.hpp"

namespace permlift {

using VertexSplit = std::pair<std::vector<VertexId>, std::vector<VertexId>>;

// ---- signed graphs (n = 2) ----

struct SignedReport {
  bool balanced = false;
  /// Present iff balanced: identity edges stay inside a part, (01) edges cross.
  std::optional<VertexSplit> partition;
  std::size_t frustration = 0;
  std::vector<EdgeId> frustrated_edges;  // under the least optimal assignment
};

/// InvalidInput unless n == 2.
SignedReport signed_analyze(const LabeledGraph& g, const SolveOptions& options = {});

struct AllNegativeReport {
  Permutation label = Permutation::identity(1);  // the common transposition (a b)
  bool bipartite = false;
  bool vertex_proper = false;
  std::uint64_t consistent_count = 0;
  /// n per bipartite component, n - 2 per non-bipartite one, multiplied.
  std::uint64_t predicted_count = 0;
  /// Connected graphs only: the consistent assignments equal the predicted
  /// ones (two-colour swaps, or constants at fixed points of the label).
  std::optional<bool> assignments_match;
  bool law_holds() const {
    return consistent_count == predicted_count && assignments_match.value_or(true);
  }
};

/// InvalidInput unless every edge carries the same transposition.
AllNegativeReport all_negative_check(const LabeledGraph& g);

struct BipartizationResult {
  std::size_t beta_c2 = 0;
  std::vector<EdgeId> deleted_edges;
  VertexSplit residual_bipartition;
};

/// Labels are ignored: every edge gets (01) over n = 2 and the minimum
/// contradiction set is the deletion set. Directed input is read as undirected.
BipartizationResult edge_bipartization(const LabeledGraph& g, const SolveOptions& options = {});

/// Smallest deletion set by trying all k-subsets for k = 0, 1, ... in
/// lexicographic order. ResourceLimit past `cap` subsets.
std::vector<EdgeId> min_bipartization_by_deletion(const LabeledGraph& g, std::uint64_t cap = 10'000'000);

// ---- Latin-square labelings ----

/// InvalidInput naming the first edge whose label lies outside the family.
void require_latin(const LabeledGraph& g, LatinKind kind);

struct CycleClassification {
  std::vector<VertexId> cycle;
  LatinKind kind = LatinKind::L;
  Permutation pi_c = Permutation::identity(1);
  Classification verdict = Classification::bad;
  std::size_t assignment_count = 0;
  /// Even length: 0 or n. Odd length under L: exactly 1 for odd n, 0 or 2
  /// for even n. Under L': 0 or n.
  bool law_holds = false;
};

/// The graph must be a single cycle labelled entirely from L_n or entirely
/// from L'_n (L is tried first).
CycleClassification classify_cycle_latin(const LabeledGraph& g);

struct DirectedLatinReport {
  std::vector<std::uint64_t> component_counts;
  Classification verdict = Classification::bad;  // good or bad only
  bool law_holds = false;                         // every count is 0 or n
};

/// Directed graph labelled from L'_n. bad iff some component has no
/// consistent assignment.
DirectedLatinReport directed_lprime_classify(const LabeledGraph& g);

struct ChordlessCycleOptions {
  std::size_t max_length = 12;
  std::uint64_t max_cycles = 100'000;
};

struct BadCycle {
  std::vector<VertexId> cycle;  // starts at its least vertex
  Permutation pi_c = Permutation::identity(1);
};

struct BipartiteLatinReport {
  std::uint64_t beta_c_prime = 0;
  bool complete_bipartite = false;
  std::uint64_t cycles_examined = 0;
  std::optional<BadCycle> witness;
};

/// Chordless cycles of g by increasing length, each from its least vertex
/// with the smaller neighbor second. visit returns true to stop.
/// ResourceLimit once more than max_cycles are produced.
std::uint64_t for_each_chordless_cycle(const LabeledGraph& g, const ChordlessCycleOptions& options,
                                       const std::function<bool(const std::vector<VertexId>&)>& visit);

/// Bipartite graph labelled from L_n. When some component has no consistent
/// assignment, returns the first chordless cycle whose composite label has
/// no fixed point (4-cycles only for a complete bipartite graph).
BipartiteLatinReport bipartite_bad_witness(const LabeledGraph& g, const ChordlessCycleOptions& options = {});

struct LatinBoundReport {
  std::uint64_t beta_c_prime = 0;
  std::uint64_t bound = 0;  // 1 for odd n, 2 for even n
  bool holds = false;
};

/// Connected non-bipartite graph labelled from L_n with n >= 3.
LatinBoundReport nonbipartite_latin_bound(const LabeledGraph& g);

}  // namespace permlift
