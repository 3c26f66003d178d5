#include "permlift/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "permlift/errors.hpp"

namespace permlift {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

void require_exact_keys(const Json& obj, const std::set<std::string>& keys, std::string_view what) {
  if (!obj.is_object()) throw InvalidInput(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!keys.contains(key)) throw InvalidInput("unknown field \"" + key + "\" in " + std::string(what));
  }
  for (const auto& key : keys) {
    if (!obj.contains(key)) throw InvalidInput("missing field \"" + key + "\" in " + std::string(what));
  }
}

const std::string& as_string(const Json& j, std::string_view what) {
  if (!j.is_string()) throw InvalidInput(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

LabeledGraph parse_instance(std::string_view json_text) {
  const Json doc = parse_json(json_text);
  require_exact_keys(doc, {"n", "mode", "vertices", "edges"}, "instance");

  const Json& n_field = doc["n"];
  if (!n_field.is_number_unsigned() || n_field.get<std::uint64_t>() == 0) {
    throw InvalidInput("\"n\" must be a positive integer");
  }
  const auto n = n_field.get<std::size_t>();

  const std::string& mode_text = as_string(doc["mode"], "\"mode\"");
  Mode mode;
  if (mode_text == "undirected") {
    mode = Mode::undirected;
  } else if (mode_text == "directed") {
    mode = Mode::directed;
  } else {
    throw InvalidInput("\"mode\" must be \"undirected\" or \"directed\"");
  }

  LabeledGraph g(n, mode);
  if (!doc["vertices"].is_array()) throw InvalidInput("\"vertices\" must be an array");
  for (const Json& v : doc["vertices"]) g.add_vertex(as_string(v, "vertex name"));

  if (!doc["edges"].is_array()) throw InvalidInput("\"edges\" must be an array");
  for (const Json& e : doc["edges"]) {
    require_exact_keys(e, {"from", "to", "perm"}, "edge");
    g.add_edge(as_string(e["from"], "\"from\""), as_string(e["to"], "\"to\""),
               parse_perm(as_string(e["perm"], "\"perm\""), n));
  }
  return g;
}

std::string write_instance(const LabeledGraph& g) {
  Json doc;
  doc["n"] = g.n();
  doc["mode"] = std::string(to_string(g.mode()));
  doc["vertices"] = Json::array();
  for (const auto& name : g.vertex_names()) doc["vertices"].push_back(name);
  doc["edges"] = Json::array();
  for (const Edge& ed : g.edges()) {
    Json e;
    e["from"] = g.name(ed.from);
    e["to"] = g.name(ed.to);
    e["perm"] = ed.label.to_string();
    doc["edges"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

InstanceFile load_instance(const std::string& path) {
  return InstanceFile{path, parse_instance(read_file(path))};
}

void save_instance(const LabeledGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write " + path);
  out << write_instance(g);
  if (!out) throw InvalidInput("failed writing " + path);
}

std::string write_witness(const EquivalenceWitness& w, const LabeledGraph& g1, const LabeledGraph& g2) {
  Json doc;
  doc["iso"] = Json::object();
  doc["sigma"] = Json::object();
  for (VertexId v = 0; v < g1.vertex_count(); ++v) {
    doc["iso"][g1.name(v)] = g2.name(w.iso.at(v));
    doc["sigma"][g1.name(v)] = w.sigma.at(v).to_string();
  }
  doc["reversed"] = w.reversed;
  return doc.dump(2) + "\n";
}

EquivalenceWitness parse_witness(std::string_view json_text, const LabeledGraph& g1, const LabeledGraph& g2) {
  const Json doc = parse_json(json_text);
  require_exact_keys(doc, {"iso", "sigma", "reversed"}, "witness");
  const std::size_t nv = g1.vertex_count();
  EquivalenceWitness w{std::vector<VertexId>(nv), std::vector<Permutation>(nv, Permutation::identity(g1.n())), {}, {}};
  if (!doc["iso"].is_object() || doc["iso"].size() != nv || !doc["sigma"].is_object() || doc["sigma"].size() != nv) {
    throw InvalidInput("witness must map every vertex exactly once");
  }
  for (VertexId v = 0; v < nv; ++v) {
    const std::string& name = g1.name(v);
    if (!doc["iso"].contains(name) || !doc["sigma"].contains(name)) throw InvalidInput("witness omits vertex " + name);
    w.iso[v] = g2.vertex(as_string(doc["iso"][name], "iso target"));
    w.sigma[v] = parse_perm(as_string(doc["sigma"][name], "sigma"), g1.n());
  }
  if (!doc["reversed"].is_array()) throw InvalidInput("\"reversed\" must be an array");
  for (const Json& e : doc["reversed"]) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() >= g1.edge_count()) {
      throw InvalidInput("\"reversed\" holds an invalid edge index");
    }
    w.reversed.push_back(e.get<EdgeId>());
  }
  std::sort(w.reversed.begin(), w.reversed.end());
  for (EdgeId e = 0; e < g1.edge_count(); ++e) {
    const VertexId a = w.iso[g1.edge(e).from];
    const VertexId b = w.iso[g1.edge(e).to];
    const auto& around = g2.incident(a);
    const auto hit = std::find_if(around.begin(), around.end(), [&](EdgeId f) { return g2.other_end(f, a) == b; });
    if (hit == around.end()) throw InvalidInput("witness maps an edge onto a non-edge");
    w.edge_map.push_back(*hit);
  }
  return w;
}

}  // namespace permlift
