#include "permlift/xform.hpp"

#include <algorithm>
#include <map>

#include "permlift/errors.hpp"

namespace permlift {

LabeledGraph restrict_vertices(const LabeledGraph& g, const std::vector<VertexId>& keep) {
  std::vector<bool> chosen(g.vertex_count(), false);
  for (VertexId v : keep) {
    if (v >= g.vertex_count()) throw InvalidInput("restriction names an unknown vertex");
    if (chosen[v]) throw InvalidInput("restriction lists vertex " + g.name(v) + " twice");
    chosen[v] = true;
  }
  LabeledGraph out(g.n(), g.mode());
  std::vector<VertexId> renumber(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (chosen[v]) renumber[v] = out.add_vertex(g.name(v));
  }
  for (const Edge& ed : g.edges()) {
    if (chosen[ed.from] && chosen[ed.to]) out.add_edge(renumber[ed.from], renumber[ed.to], ed.label);
  }
  return out;
}

LabeledGraph restrict_edges(const LabeledGraph& g, const std::vector<EdgeId>& keep) {
  std::vector<bool> chosen(g.edge_count(), false);
  for (EdgeId e : keep) {
    if (e >= g.edge_count()) throw InvalidInput("restriction names an unknown edge");
    chosen[e] = true;
  }
  LabeledGraph out(g.n(), g.mode());
  for (const auto& name : g.vertex_names()) out.add_vertex(name);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (chosen[e]) out.add_edge(g.edge(e).from, g.edge(e).to, g.edge(e).label);
  }
  return out;
}

LabeledGraph delete_edge(const LabeledGraph& g, EdgeId e) {
  if (e >= g.edge_count()) throw InvalidInput("edge index out of range");
  std::vector<EdgeId> keep;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i != e) keep.push_back(i);
  }
  return restrict_edges(g, keep);
}

IdentifyResult identify(const LabeledGraph& g, const IdentifySpec& spec) {
  const VertexId v1 = spec.v1;
  const VertexId v2 = spec.v2;
  if (v1 >= g.vertex_count() || v2 >= g.vertex_count()) throw InvalidInput("identify names an unknown vertex");
  if (v1 == v2) throw InvalidInput("identify needs two distinct vertices");

  LabeledGraph h(g.n(), g.mode());
  std::vector<VertexId> renumber(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == v2) continue;
    renumber[v] = h.add_vertex(v == v1 && !spec.new_name.empty() ? spec.new_name : g.name(v));
  }
  const VertexId merged = renumber[v1];
  renumber[v2] = merged;

  auto key_of = [&](VertexId a, VertexId b) {
    if (g.mode() == Mode::undirected && a > b) std::swap(a, b);
    return std::pair{a, b};
  };

  IdentifyResult result{LabeledGraph(g.n(), g.mode()), merged, {}, {}};
  std::map<std::pair<VertexId, VertexId>, EdgeId> placed;  // H endpoint key -> source edge
  std::vector<EdgeId> kept;

  // v2's edges go last so that a conflict always finds the v1 edge in place.
  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).from != v2 && g.edge(e).to != v2) order.push_back(e);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).from == v2 || g.edge(e).to == v2) order.push_back(e);
  }

  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    const bool from_merged = ed.from == v1 || ed.from == v2;
    const bool to_merged = ed.to == v1 || ed.to == v2;
    if (from_merged && to_merged) {
      result.dropped.push_back({e, DropReason::joins_identified, std::nullopt});
      continue;
    }
    const auto key = key_of(renumber[ed.from], renumber[ed.to]);
    const auto clash = placed.find(key);
    if (clash == placed.end()) {
      placed.emplace(key, e);
      kept.push_back(e);
      continue;
    }
    if (spec.policy == ConflictPolicy::reject) {
      const VertexId u = from_merged ? ed.to : ed.from;
      const Permutation mine = g.label_from(e, u);
      const Permutation theirs = g.label_from(clash->second, u);
      if (mine != theirs) {
        throw InvalidInput("vertex " + g.name(u) + " is adjacent to both " + g.name(v1) + " and " + g.name(v2) +
                           " with different labels");
      }
    }
    result.dropped.push_back({e, DropReason::common_neighbor, clash->second});
  }

  std::sort(kept.begin(), kept.end());
  std::sort(result.dropped.begin(), result.dropped.end(),
            [](const DroppedEdge& a, const DroppedEdge& b) { return a.edge < b.edge; });
  for (EdgeId e : kept) {
    const Edge& ed = g.edge(e);
    h.add_edge(renumber[ed.from], renumber[ed.to], ed.label);
    result.origin.push_back(e);
  }
  result.graph = std::move(h);
  return result;
}

std::size_t min_contradictions(const LabeledGraph& g, const SolveOptions& options) {
  if (g.edge_count() == 0) return 0;
  return solve(g, options).beta_c;
}

bool IdentifyBounds::all_hold() const {
  if (lower_holds && !*lower_holds) return false;
  if (!lower_by_dropped_holds || !upper_holds) return false;
  if (shared) {
    return shared->lower_holds && shared->upper_holds && shared->intersection_holds && shared->pigeonhole_holds;
  }
  return true;
}

IdentifyBounds check_identify_bounds(const LabeledGraph& g, const IdentifySpec& spec, const SolveOptions& options) {
  const IdentifyResult ident = identify(g, spec);
  const LabeledGraph& h = ident.graph;

  IdentifyBounds b;
  b.beta_c_g = min_contradictions(g, options);
  b.beta_c_h = min_contradictions(h, options);
  b.min_degree = std::min(g.degree(spec.v1), g.degree(spec.v2));
  b.dropped = ident.dropped.size();
  if (b.dropped <= 1) b.lower_holds = b.beta_c_g <= b.beta_c_h + 1;
  b.lower_by_dropped_holds = b.beta_c_g <= b.beta_c_h + b.dropped;
  b.upper_holds = b.beta_c_h <= b.beta_c_g + b.min_degree;

  const auto comp = component_of(g);
  b.same_component = comp[spec.v1] == comp[spec.v2];
  if (b.same_component) return b;

  SharedValueCheck s;
  s.values_v1 = extendable_values(g, spec.v1);
  s.values_v2 = extendable_values(g, spec.v2);
  std::set_intersection(s.values_v1.begin(), s.values_v1.end(), s.values_v2.begin(), s.values_v2.end(),
                        std::back_inserter(s.shared));
  s.beta_prime_first = s.values_v1.size();
  s.beta_prime_second = s.values_v2.size();

  const auto h_comp = component_of(h);
  std::vector<VertexId> merged_component;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (h_comp[v] == h_comp[ident.merged]) merged_component.push_back(v);
  }
  const LabeledGraph merged = restrict_vertices(h, merged_component);
  const VertexId merged_id =
      static_cast<VertexId>(std::find(merged_component.begin(), merged_component.end(), ident.merged) -
                            merged_component.begin());
  s.beta_prime_merged = extendable_values(merged, merged_id).size();
  s.beta_c_merged = min_contradictions(merged, options);

  const std::uint64_t n = g.n();
  s.lower_holds = s.beta_prime_first + s.beta_prime_second <= s.beta_prime_merged + n;
  s.upper_holds = s.beta_prime_merged <= std::min(s.beta_prime_first, s.beta_prime_second);
  s.intersection_holds = s.beta_prime_merged == s.shared.size();
  s.pigeonhole_applies = s.beta_prime_first + s.beta_prime_second > n;
  s.pigeonhole_holds = !s.pigeonhole_applies || s.beta_c_merged == 0;
  b.shared = std::move(s);
  return b;
}

}  // namespace permlift
