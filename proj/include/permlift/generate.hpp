#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "permlift/graph.hpp"

namespace permlift {

enum class GraphModel { gnp, cycle, tree, complete_bipartite };
enum class LabelSource { uniform_involutions, uniform_sn, latin_L, latin_Lprime, all_neg };

std::string_view to_string(GraphModel m);
std::string_view to_string(LabelSource s);
/// InvalidInput on an unknown name.
GraphModel parse_model(std::string_view name);
LabelSource parse_label_source(std::string_view name);

struct GenSpec {
  GraphModel model = GraphModel::gnp;
  std::size_t size = 5;        // vertices; cycle length; left side of K_{s,t}
  std::size_t other_side = 0;  // right side of K_{s,t}
  double p = 0.5;              // gnp edge probability
  std::size_t n = 3;
  LabelSource labels = LabelSource::uniform_involutions;
  std::uint64_t seed = 0;
};

/// Platform-independent draws from a 64-bit Mersenne Twister.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

Permutation random_permutation(std::size_t n, Rng& rng);
/// Uniform over all involutions of [n].
Permutation random_involution(std::size_t n, Rng& rng);

/// Vertices are named v0, v1, ... For complete_bipartite the first `size`
/// vertices form one side. uniform_sn and latin_Lprime produce directed
/// graphs, the other sources undirected ones. Equal specs give equal graphs.
LabeledGraph generate(const GenSpec& spec);

}  // namespace permlift
