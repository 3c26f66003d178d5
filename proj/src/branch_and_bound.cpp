#include "branch_and_bound.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <thread>

#include "permlift/errors.hpp"

namespace permlift::detail {

ContradictionSearch::ContradictionSearch(const LabeledGraph& g) : n_(g.n()) {
  const std::size_t nv = g.vertex_count();
  std::vector<bool> placed(nv, false);
  while (order_.size() < nv) {
    VertexId start = nv;
    for (VertexId v = 0; v < nv; ++v) {
      if (!placed[v] && (start == nv || g.degree(v) > g.degree(start))) start = v;
    }
    std::queue<VertexId> q;
    q.push(start);
    placed[start] = true;
    while (!q.empty()) {
      const VertexId u = q.front();
      q.pop();
      order_.push_back(u);
      std::vector<VertexId> next;
      for (EdgeId e : g.incident(u)) {
        const VertexId w = g.other_end(e, u);
        if (!placed[w]) {
          placed[w] = true;
          next.push_back(w);
        }
      }
      std::sort(next.begin(), next.end());
      for (VertexId w : next) q.push(w);
    }
  }

  std::vector<std::size_t> pos(nv);
  for (std::size_t p = 0; p < nv; ++p) pos[order_[p]] = p;
  checks_.resize(nv);
  tables_.resize(g.edge_count() * n_);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    std::copy(ed.label.image().begin(), ed.label.image().end(), tables_.begin() + static_cast<std::ptrdiff_t>(e * n_));
    const std::size_t pf = pos[ed.from];
    const std::size_t pt = pos[ed.to];
    if (pf > pt) {
      checks_[pf].push_back({pt, e, true});
    } else {
      checks_[pt].push_back({pf, e, false});
    }
  }
}

class SearchWorker {
 public:
  SearchWorker(const ContradictionSearch& s, std::span<const std::optional<Point>> fixed,
               std::atomic<std::size_t>& limit, bool stop_at_first, std::atomic<bool>& stop, NodeBudget& budget)
      : s_(s), fixed_(fixed), limit_(limit), stop_at_first_(stop_at_first), stop_(stop), budget_(budget),
        values_(s.order_.size(), 0) {}

  void explore_from_root(Point root_value) {
    values_[0] = root_value;
    descend(1, 0);
  }

  void descend(std::size_t pos, std::size_t violations) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (pos == values_.size()) {
      record(violations);
      return;
    }
    const auto& fixed = fixed_.empty() ? std::nullopt : fixed_[s_.order_[pos]];
    const Point lo = fixed ? *fixed : 0;
    const Point hi = fixed ? *fixed + 1 : static_cast<Point>(s_.n_);
    for (Point x = lo; x < hi; ++x) {
      if (++pending_ == kFlush) flush();
      std::size_t added = 0;
      for (const auto& c : s_.checks_[pos]) {
        const Point* table = s_.tables_.data() + c.edge * s_.n_;
        const Point other = values_[c.other_pos];
        added += c.current_is_from ? (table[x] != other) : (table[other] != x);
      }
      if (violations + added >= limit_.load(std::memory_order_relaxed)) continue;
      values_[pos] = x;
      descend(pos + 1, violations + added);
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  void flush() {
    if (!budget_.charge(pending_)) {
      exhausted_ = true;
      stop_.store(true);
    }
    pending_ = 0;
  }

  std::optional<SearchHit> best;
  bool exhausted_ = false;

 private:
  static constexpr std::uint64_t kFlush = 1024;

  void record(std::size_t violations) {
    VertexAssignment k{std::vector<Point>(values_.size())};
    for (std::size_t p = 0; p < values_.size(); ++p) k[s_.order_[p]] = values_[p];
    if (!best || violations < best->violations) best = SearchHit{violations, std::move(k)};
    if (stop_at_first_) {
      stop_.store(true);
      return;
    }
    std::size_t current = limit_.load();
    while (violations < current && !limit_.compare_exchange_weak(current, violations)) {
    }
  }

  const ContradictionSearch& s_;
  std::span<const std::optional<Point>> fixed_;
  std::atomic<std::size_t>& limit_;
  bool stop_at_first_;
  std::atomic<bool>& stop_;
  NodeBudget& budget_;
  std::vector<Point> values_;
  std::uint64_t pending_ = 0;
};

namespace {

[[noreturn]] void throw_budget(const NodeBudget& budget) {
  throw ResourceLimit("branch-and-bound node cap of " + std::to_string(budget.cap()) + " exceeded");
}

}  // namespace

std::optional<SearchHit> ContradictionSearch::minimize(std::size_t limit, unsigned threads,
                                                       NodeBudget& budget) const {
  if (order_.empty()) {
    if (limit == 0) return std::nullopt;
    return SearchHit{0, VertexAssignment{}};
  }
  std::atomic<std::size_t> shared_limit{limit};
  std::atomic<bool> stop{false};
  std::atomic<Point> next_root{0};
  const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n_));

  std::vector<SearchWorker> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(*this, std::span<const std::optional<Point>>{}, shared_limit, false, stop, budget);

  auto drain = [&](SearchWorker& w) {
    for (Point x = next_root++; x < n_ && !stop.load(); x = next_root++) w.explore_from_root(x);
    w.flush();
  };
  if (workers == 1) {
    drain(pool[0]);
  } else {
    std::vector<std::jthread> running;
    for (unsigned t = 0; t < workers; ++t) running.emplace_back([&, t] { drain(pool[t]); });
  }

  std::optional<SearchHit> best;
  for (auto& w : pool) {
    if (w.exhausted_) throw_budget(budget);
    if (w.best && (!best || w.best->violations < best->violations)) best = std::move(w.best);
  }
  return best;
}

std::optional<SearchHit> ContradictionSearch::feasible(std::span<const std::optional<Point>> fixed,
                                                       std::size_t target, NodeBudget& budget) const {
  if (order_.empty()) return SearchHit{0, VertexAssignment{}};
  std::atomic<std::size_t> limit{target + 1};
  std::atomic<bool> stop{false};
  SearchWorker w(*this, fixed, limit, true, stop, budget);
  const auto& root_fixed = fixed[order_[0]];
  const Point lo = root_fixed ? *root_fixed : 0;
  const Point hi = root_fixed ? *root_fixed + 1 : static_cast<Point>(n_);
  for (Point x = lo; x < hi && !stop.load(); ++x) w.explore_from_root(x);
  w.flush();
  if (w.exhausted_) throw_budget(budget);
  return w.best;
}

}  // namespace permlift::detail
