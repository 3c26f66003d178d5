#include "permlift/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "permlift/errors.hpp"

namespace permlift {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    std::ostringstream msg;
    msg << "permutation degree mismatch: " << a.degree() << " vs " << b.degree();
    throw InvalidInput(msg.str());
  }
}

// Small hand-rolled scanner; the grammar is two bracket forms over integers.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a non-negative integer");
    }
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > 100'000'000) fail("integer too large");
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << "malformed permutation \"" << text_ << "\": " << what << " at offset " << pos_;
    throw InvalidInput(msg.str());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Point checked_point(std::size_t value, std::size_t n) {
  if (value >= n) {
    std::ostringstream msg;
    msg << "index out of range: " << value << " >= degree " << n;
    throw InvalidInput(msg.str());
  }
  return static_cast<Point>(value);
}

}  // namespace

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  if (image_.empty()) throw InvalidInput("permutation degree must be at least 1");
  std::vector<bool> seen(image_.size(), false);
  for (Point y : image_) {
    if (y >= image_.size()) {
      std::ostringstream msg;
      msg << "index out of range: " << y << " >= degree " << image_.size();
      throw InvalidInput(msg.str());
    }
    if (seen[y]) {
      std::ostringstream msg;
      msg << "repeated index " << y << " in image list";
      throw InvalidInput(msg.str());
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw InvalidInput("permutation degree must be at least 1");
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), Point{0});
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  if (n == 0) throw InvalidInput("permutation degree must be at least 1");
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (Point x : cycle) {
      checked_point(x, n);
      if (used[x]) {
        std::ostringstream msg;
        msg << "repeated index " << x << " in cycle notation";
        throw InvalidInput(msg.str());
      }
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) inv[image_[x]] = static_cast<Point>(x);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] != x) return false;
  }
  return true;
}

bool Permutation::is_involution() const noexcept {
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[image_[x]] != x) return false;
  }
  return true;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> fixed;
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] == x) fixed.push_back(static_cast<Point>(x));
  }
  return fixed;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = image_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = image_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (x) out += ',';
    out += std::to_string(image_[x]);
  }
  out += ']';
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  require_same_degree(outer, inner);
  std::vector<Point> image(inner.degree());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = outer(inner(static_cast<Point>(x)));
  return Permutation(std::move(image));
}

Permutation parse_perm(std::string_view text, std::size_t n) {
  if (n == 0) throw InvalidInput("permutation degree must be at least 1");
  Scanner in(text);
  if (in.done()) in.fail("empty text");

  if (in.accept('[')) {
    std::vector<Point> image;
    if (!in.peek(']')) {
      do {
        image.push_back(checked_point(in.number(), n));
      } while (in.accept(','));
    }
    in.expect(']');
    if (!in.done()) in.fail("trailing characters");
    if (image.size() != n) {
      std::ostringstream msg;
      msg << "image list has " << image.size() << " entries, expected " << n;
      throw InvalidInput(msg.str());
    }
    return Permutation(std::move(image));
  }

  if (!in.peek('(')) in.fail("expected '[' or '('");
  std::vector<std::vector<Point>> cycles;
  while (in.accept('(')) {
    std::vector<Point> cycle;
    while (!in.peek(')')) {
      cycle.push_back(checked_point(in.number(), n));
      in.accept(',');
    }
    in.expect(')');
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  if (!in.done()) in.fail("trailing characters");
  return Permutation::from_cycles(n, cycles);
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

LatinFamily latin_family(std::size_t n, LatinKind kind) {
  if (n == 0) throw InvalidInput("Latin family order must be at least 1");
  LatinFamily family{n, kind, {}};
  family.members.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> image(n);
    for (std::size_t x = 0; x < n; ++x) {
      image[x] = static_cast<Point>(kind == LatinKind::L ? (i + n - x) % n : (i + x) % n);
    }
    family.members.emplace_back(std::move(image));
  }
  return family;
}

std::optional<std::size_t> latin_index(const Permutation& p, LatinKind kind) {
  const std::size_t n = p.degree();
  const std::size_t i = p(0);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t expected = kind == LatinKind::L ? (i + n - x) % n : (i + x) % n;
    if (p(static_cast<Point>(x)) != expected) return std::nullopt;
  }
  return i;
}

std::string_view to_string(LatinKind kind) { return kind == LatinKind::L ? "L" : "Lprime"; }

}  // namespace permlift
