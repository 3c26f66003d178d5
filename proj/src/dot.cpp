#include "permlift/dot.hpp"

#include <sstream>

namespace permlift {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string lift_node(const LiftVertex& v) {
  return "v_" + std::to_string(v.base) + "_" + std::to_string(v.value);
}

}  // namespace

std::string base_to_dot(const LabeledGraph& g) {
  const bool directed = g.mode() == Mode::directed;
  const char* arrow = directed ? " -> " : " -- ";
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " G {\n";
  for (const auto& name : g.vertex_names()) out << "  " << quoted(name) << ";\n";
  for (const Edge& ed : g.edges()) {
    out << "  " << quoted(g.name(ed.from)) << arrow << quoted(g.name(ed.to)) << " [label="
        << quoted(ed.label.to_cycle_string());
    if (!directed && !ed.label.is_involution()) out << ", dir=forward";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string lift_to_dot(const LiftGraph& lift) {
  std::ostringstream out;
  out << "graph KG {\n";
  for (VertexId i = 0; i < lift.base.vertex_count(); ++i) {
    out << "  subgraph cluster_" << i << " {\n";
    out << "    label=" << quoted(lift.base.name(i)) << ";\n";
    out << "    rank=same;\n";
    for (Point j = 0; j < lift.n(); ++j) out << "    " << lift_node({i, j}) << ";\n";
    out << "  }\n";
  }
  for (const LiftEdge& le : lift.edges) out << "  " << lift_node(le.a) << " -- " << lift_node(le.b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace permlift
