#pragma once

#include <string>

#include "permlift/graph.hpp"
#include "permlift/lift.hpp"

namespace permlift {

/// `graph` with `--` edges in undirected mode, `digraph` with `->` otherwise.
/// Edge labels use cycle notation; in undirected mode a non-involution label
/// is drawn with an arrow to show the orientation it is read in.
std::string base_to_dot(const LabeledGraph& g);

/// One same-rank cluster per fiber, labelled by the base vertex name.
/// Lift vertex (i, j) is the node "v_i_j".
std::string lift_to_dot(const LiftGraph& lift);

}  // namespace permlift
