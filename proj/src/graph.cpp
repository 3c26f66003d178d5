#include "permlift/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "permlift/errors.hpp"

namespace permlift {

std::string_view to_string(Mode mode) { return mode == Mode::directed ? "directed" : "undirected"; }

LabeledGraph::LabeledGraph(std::size_t n, Mode mode) : n_(n), mode_(mode) {
  if (n == 0) throw InvalidInput("alphabet size n must be at least 1");
}

std::optional<VertexId> LabeledGraph::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId LabeledGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw InvalidInput("unknown vertex \"" + std::string(name) + "\"");
}

VertexId LabeledGraph::add_vertex(std::string name) {
  if (index_.count(name)) throw InvalidInput("duplicate vertex name \"" + name + "\"");
  const VertexId id = names_.size();
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  incident_.emplace_back();
  return id;
}

EdgeId LabeledGraph::add_edge(VertexId from, VertexId to, Permutation label) {
  if (from >= names_.size() || to >= names_.size()) throw InvalidInput("edge endpoint out of range");
  if (label.degree() != n_) {
    std::ostringstream msg;
    msg << "edge " << names_[from] << "->" << names_[to] << " has label of degree " << label.degree()
        << ", expected " << n_;
    throw InvalidInput(msg.str());
  }
  const EdgeId id = edges_.size();
  edges_.push_back(Edge{from, to, std::move(label)});
  incident_[from].push_back(id);
  incident_[to].push_back(id);
  return id;
}

EdgeId LabeledGraph::add_edge(std::string_view from, std::string_view to, Permutation label) {
  return add_edge(vertex(from), vertex(to), std::move(label));
}

VertexId LabeledGraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edges_.at(e);
  return ed.from == v ? ed.to : ed.from;
}

Permutation LabeledGraph::label_from(EdgeId e, VertexId v) const {
  const Edge& ed = edges_.at(e);
  return ed.from == v ? ed.label : ed.label.inverse();
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return Rational{num / g, den / g};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

void require_total(const LabeledGraph& g, const VertexAssignment& k) {
  if (k.size() != g.vertex_count()) {
    std::ostringstream msg;
    msg << "assignment covers " << k.size() << " vertices, graph has " << g.vertex_count();
    throw InvalidInput(msg.str());
  }
  for (std::size_t v = 0; v < k.size(); ++v) {
    if (k[v] >= g.n()) {
      std::ostringstream msg;
      msg << "value " << k[v] << " at vertex " << g.name(v) << " is outside [0," << g.n() << ")";
      throw InvalidInput(msg.str());
    }
  }
}

std::string edge_location(const LabeledGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  std::ostringstream out;
  out << "edge " << e << " (" << g.name(ed.from) << "->" << g.name(ed.to) << ")";
  return out.str();
}

}  // namespace

std::vector<EdgeId> contradictions(const LabeledGraph& g, const VertexAssignment& k) {
  require_total(g, k);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.label(k[ed.from]) != k[ed.to]) out.push_back(e);
  }
  return out;
}

bool is_consistent(const LabeledGraph& g, const VertexAssignment& k) { return contradictions(g, k).empty(); }

GameValueReport game_value(const LabeledGraph& g, std::size_t beta_c) {
  const std::size_t m = g.edge_count();
  if (m == 0) throw InvalidInput("game value is undefined for a graph without edges");
  if (beta_c > m) throw InvalidInput("contradiction count exceeds edge count");
  return GameValueReport{beta_c, m,
                         Rational::make(static_cast<std::int64_t>(m - beta_c), static_cast<std::int64_t>(m))};
}

std::vector<Violation> validate(const LabeledGraph& g) {
  std::vector<Violation> out;
  std::map<std::pair<VertexId, VertexId>, EdgeId> seen;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.from == ed.to) {
      out.push_back({ViolationKind::self_loop, e, "self-loop at " + g.name(ed.from) + " (" + edge_location(g, e) + ")"});
      continue;
    }
    auto key = std::pair{ed.from, ed.to};
    if (g.mode() == Mode::undirected && key.first > key.second) std::swap(key.first, key.second);
    if (auto [it, fresh] = seen.emplace(key, e); !fresh) {
      out.push_back({ViolationKind::duplicate_edge, e,
                     "duplicate " + edge_location(g, e) + " repeats edge " + std::to_string(it->second)});
    }
    if (g.mode() == Mode::undirected && !ed.label.is_involution()) {
      out.push_back({ViolationKind::non_involution, e,
                     "non-involution label " + ed.label.to_cycle_string() + " on undirected " + edge_location(g, e)});
    }
  }
  return out;
}

void require_simple(const LabeledGraph& g) {
  for (const auto& v : validate(g)) {
    if (v.kind != ViolationKind::non_involution) throw InvalidInput(v.message);
  }
}

std::vector<std::size_t> component_of(const LabeledGraph& g) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.vertex_count(), unset);
  std::size_t next = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId u = q.front();
      q.pop();
      for (EdgeId e : g.incident(u)) {
        const VertexId w = g.other_end(e, u);
        if (comp[w] == unset) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

UnderlyingProperties underlying_properties(const LabeledGraph& g) {
  UnderlyingProperties props;
  const std::size_t nv = g.vertex_count();
  std::vector<int> color(nv, -1);
  for (VertexId s = 0; s < nv; ++s) {
    if (color[s] != -1) continue;
    std::vector<VertexId> members;
    color[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId u = q.front();
      q.pop();
      members.push_back(u);
      for (EdgeId e : g.incident(u)) {
        const VertexId w = g.other_end(e, u);
        if (w == u) {
          props.bipartite = false;
        } else if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          props.bipartite = false;
        }
      }
    }
    std::sort(members.begin(), members.end());
    props.components.push_back(std::move(members));
  }
  props.connected = props.components.size() <= 1;
  if (props.bipartite) {
    std::pair<std::vector<VertexId>, std::vector<VertexId>> sides;
    for (VertexId v = 0; v < nv; ++v) (color[v] == 0 ? sides.first : sides.second).push_back(v);
    props.bipartition = std::move(sides);
  }
  return props;
}

bool is_forest(const LabeledGraph& g) {
  const auto comp = component_of(g);
  const std::size_t components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  for (const Edge& ed : g.edges()) {
    if (ed.from == ed.to) return false;
  }
  return g.edge_count() + components == g.vertex_count();
}

bool is_single_cycle(const LabeledGraph& g) {
  const std::size_t nv = g.vertex_count();
  if (nv < 2 || g.edge_count() != nv) return false;
  for (VertexId v = 0; v < nv; ++v) {
    if (g.degree(v) != 2) return false;
  }
  for (const Edge& ed : g.edges()) {
    if (ed.from == ed.to) return false;
  }
  return underlying_properties(g).connected;
}

}  // namespace permlift
