#include "permlift/generate.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "permlift/errors.hpp"

namespace permlift {

std::string_view to_string(GraphModel m) {
  switch (m) {
    case GraphModel::gnp: return "gnp";
    case GraphModel::cycle: return "cycle";
    case GraphModel::tree: return "tree";
    case GraphModel::complete_bipartite: return "complete_bipartite";
  }
  return "?";
}

std::string_view to_string(LabelSource s) {
  switch (s) {
    case LabelSource::uniform_involutions: return "uniform_involutions";
    case LabelSource::uniform_sn: return "uniform_sn";
    case LabelSource::latin_L: return "latin_L";
    case LabelSource::latin_Lprime: return "latin_Lprime";
    case LabelSource::all_neg: return "all_neg";
  }
  return "?";
}

GraphModel parse_model(std::string_view name) {
  for (auto m : {GraphModel::gnp, GraphModel::cycle, GraphModel::tree, GraphModel::complete_bipartite}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidInput("unknown graph model \"" + std::string(name) + "\"");
}

LabelSource parse_label_source(std::string_view name) {
  for (auto s : {LabelSource::uniform_involutions, LabelSource::uniform_sn, LabelSource::latin_L,
                 LabelSource::latin_Lprime, LabelSource::all_neg}) {
    if (to_string(s) == name) return s;
  }
  throw InvalidInput("unknown label source \"" + std::string(name) + "\"");
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::logic_error("empty range");
  // Largest multiple of bound that fits, so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), Point{0});
  for (std::size_t i = n; i > 1; --i) std::swap(image[i - 1], image[rng.below(i)]);
  return Permutation(std::move(image));
}

Permutation random_involution(std::size_t n, Rng& rng) {
  // count[m] = involutions of an m-set: count[m] = count[m-1] + (m-1) count[m-2].
  std::vector<std::uint64_t> count{1, 1};
  for (std::size_t m = 2; m <= n; ++m) {
    const std::uint64_t pairs = m - 1;
    if (count[m - 2] > (UINT64_MAX - count[m - 1]) / pairs) throw InvalidInput("n too large for involution sampling");
    count.push_back(count[m - 1] + pairs * count[m - 2]);
  }
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), Point{0});
  std::vector<Point> open(image);  // unassigned points, ascending
  while (!open.empty()) {
    const std::size_t m = open.size();
    const Point x = open.front();
    const std::uint64_t r = rng.below(count[m]);
    if (r < count[m - 1]) {
      open.erase(open.begin());
      continue;
    }
    const std::size_t partner = 1 + (r - count[m - 1]) / count[m - 2];
    const Point y = open[partner];
    image[x] = y;
    image[y] = x;
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(partner));
    open.erase(open.begin());
  }
  return Permutation(std::move(image));
}

LabeledGraph generate(const GenSpec& spec) {
  if (spec.n == 0) throw InvalidInput("n must be positive");
  if (spec.size == 0) throw InvalidInput("size must be positive");
  if (spec.model == GraphModel::cycle && spec.size < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  if (spec.model == GraphModel::complete_bipartite && spec.other_side == 0) {
    throw InvalidInput("complete bipartite graphs need both sides non-empty");
  }
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  if (spec.labels == LabelSource::all_neg && spec.n < 2) throw InvalidInput("all_neg labels need n >= 2");

  Rng rng(spec.seed);
  const bool directed = spec.labels == LabelSource::uniform_sn || spec.labels == LabelSource::latin_Lprime;
  LabeledGraph g(spec.n, directed ? Mode::directed : Mode::undirected);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::size_t vertices = spec.size;
  switch (spec.model) {
    case GraphModel::gnp:
      for (VertexId a = 0; a < vertices; ++a) {
        for (VertexId b = a + 1; b < vertices; ++b) {
          if (rng.unit() < spec.p) pairs.emplace_back(a, b);
        }
      }
      break;
    case GraphModel::cycle:
      for (VertexId a = 0; a < vertices; ++a) pairs.emplace_back(a, (a + 1) % vertices);
      break;
    case GraphModel::tree:
      for (VertexId b = 1; b < vertices; ++b) pairs.emplace_back(rng.below(b), b);
      break;
    case GraphModel::complete_bipartite:
      vertices = spec.size + spec.other_side;
      for (VertexId a = 0; a < spec.size; ++a) {
        for (VertexId b = spec.size; b < vertices; ++b) pairs.emplace_back(a, b);
      }
      break;
  }

  for (VertexId v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
  const LatinFamily latin_l = latin_family(spec.n, LatinKind::L);
  const LatinFamily latin_lp = latin_family(spec.n, LatinKind::Lprime);
  for (const auto& [a, b] : pairs) {
    switch (spec.labels) {
      case LabelSource::uniform_involutions: g.add_edge(a, b, random_involution(spec.n, rng)); break;
      case LabelSource::uniform_sn: g.add_edge(a, b, random_permutation(spec.n, rng)); break;
      case LabelSource::latin_L: g.add_edge(a, b, latin_l.members[rng.below(spec.n)]); break;
      case LabelSource::latin_Lprime: g.add_edge(a, b, latin_lp.members[rng.below(spec.n)]); break;
      case LabelSource::all_neg: g.add_edge(a, b, Permutation::from_cycles(spec.n, {{0, 1}})); break;
    }
  }
  return g;
}

}  // namespace permlift
