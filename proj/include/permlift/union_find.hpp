#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace permlift {

// Union by size with path halving. The representative of a set is not
// stable across unions; callers that need deterministic labels should key
// on the least member instead.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t set_size(std::size_t x) noexcept { return size_[find(x)]; }
  std::size_t size() const noexcept { return parent_.size(); }

  /// Sets as sorted member lists, ordered by least member.
  std::vector<std::vector<std::size_t>> groups() {
    std::vector<std::size_t> slot(parent_.size(), npos);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      const std::size_t r = find(x);
      if (slot[r] == npos) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].push_back(x);
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace permlift
