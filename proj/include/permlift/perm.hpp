#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permlift {

using Point = std::uint32_t;

/// A bijection on [n] = {0, ..., n-1}, stored as its image table.
///
/// Degree is explicit and never promoted: combining permutations of
/// different degree throws InvalidInput.
class Permutation {
 public:
  /// Validates that `image` is a bijection of [image.size()].
  explicit Permutation(std::vector<Point> image);

  static Permutation identity(std::size_t n);

  /// Builds a permutation of degree n from disjoint cycles; points not
  /// mentioned are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return image_.size(); }
  Point operator()(Point x) const { return image_[x]; }
  std::span<const Point> image() const noexcept { return image_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_involution() const noexcept;
  std::vector<Point> fixed_points() const;
  /// Non-trivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// Lengths of all cycles including fixed points, in order of least point.
  std::vector<std::size_t> cycle_lengths() const;

  /// Canonical form, e.g. "[1,2,0]".
  std::string to_string() const;
  /// Cycle notation, e.g. "(0 1 2)"; identity renders as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> image_;
};

/// Functional composition: result(x) = outer(inner(x)).
Permutation compose(const Permutation& outer, const Permutation& inner);
inline Permutation operator*(const Permutation& outer, const Permutation& inner) {
  return compose(outer, inner);
}

/// Accepts cycle notation "(0 2)(1 3)" or an image list "[2,3,0,1]".
Permutation parse_perm(std::string_view text, std::size_t n);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

enum class LatinKind {
  L,       // pi_i(x) = i - x (mod n)
  Lprime,  // sigma_i(x) = i + x (mod n)
};

struct LatinFamily {
  std::size_t n = 0;
  LatinKind kind = LatinKind::L;
  std::vector<Permutation> members;
};

LatinFamily latin_family(std::size_t n, LatinKind kind);

/// Index i with p == members[i] of the given family, if p belongs to it.
std::optional<std::size_t> latin_index(const Permutation& p, LatinKind kind);

std::string_view to_string(LatinKind kind);

}  // namespace permlift
