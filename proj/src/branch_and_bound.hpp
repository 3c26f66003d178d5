#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permlift/graph.hpp"

namespace permlift::detail {

// Shared node counter for a sequence of searches on one instance.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t cap) : cap_(cap) {}
  // Returns false once the cap is exceeded.
  bool charge(std::uint64_t nodes) { return used_.fetch_add(nodes, std::memory_order_relaxed) + nodes <= cap_; }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
};

struct SearchHit {
  std::size_t violations = 0;
  VertexAssignment assignment;
};

// Depth-first search over vertex assignments in BFS order (from the
// highest-degree vertex, ties to the lower id), values ascending. A partial
// assignment is charged for every edge whose endpoints are both assigned
// and pruned once that charge reaches the current limit.
class ContradictionSearch {
 public:
  explicit ContradictionSearch(const LabeledGraph& g);

  // Least-violation assignment with fewer than `limit` violations, if any.
  // Parallelizes over the first vertex's values; the violation count of the
  // result does not depend on `threads`.
  std::optional<SearchHit> minimize(std::size_t limit, unsigned threads, NodeBudget& budget) const;

  // Any assignment with at most `target` violations that agrees with `fixed`.
  std::optional<SearchHit> feasible(std::span<const std::optional<Point>> fixed, std::size_t target,
                                    NodeBudget& budget) const;

  const std::vector<VertexId>& order() const { return order_; }

 private:
  struct Check {
    std::size_t other_pos;
    EdgeId edge;
    bool current_is_from;
  };

  friend class SearchWorker;

  std::size_t n_;
  std::vector<VertexId> order_;              // position -> vertex
  std::vector<std::vector<Check>> checks_;   // position -> edges to earlier positions
  std::vector<Point> tables_;                // edge e label at [e * n, (e + 1) * n)
};

}  // namespace permlift::detail
