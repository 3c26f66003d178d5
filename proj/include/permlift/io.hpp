#pragma once

#include <string>
#include <string_view>

#include "permlift/equiv.hpp"
#include "permlift/graph.hpp"

namespace permlift {

/// Tag for the instance layout below. Not written into files.
inline constexpr std::string_view kInstanceFormat = "permlift-instance/1";

/// {"n": int, "mode": "undirected"|"directed", "vertices": [name...],
///  "edges": [{"from": name, "to": name, "perm": text}...]}
/// Unknown or missing fields are InvalidInput. Labels may use either
/// permutation syntax; writing always uses the image list, so
/// parse(write(g)) == g and write(parse(write(g))) == write(g) byte for byte.
LabeledGraph parse_instance(std::string_view json_text);
std::string write_instance(const LabeledGraph& g);

struct InstanceFile {
  std::string path;
  LabeledGraph graph;
  std::string_view format = kInstanceFormat;
};

InstanceFile load_instance(const std::string& path);
void save_instance(const LabeledGraph& g, const std::string& path);

/// {"iso": {v: u...}, "sigma": {v: perm...}, "reversed": [edge ids]}
/// keyed by vertex names of g1 (iso values name g2 vertices).
std::string write_witness(const EquivalenceWitness& w, const LabeledGraph& g1, const LabeledGraph& g2);
/// edge_map is recomputed from g1, g2 and the other fields.
EquivalenceWitness parse_witness(std::string_view json_text, const LabeledGraph& g1, const LabeledGraph& g2);

}  // namespace permlift
