#include "permlift/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permlift/dot.hpp"
#include "permlift/equiv.hpp"
#include "permlift/errors.hpp"
#include "permlift/generate.hpp"
#include "permlift/io.hpp"
#include "permlift/lift.hpp"
#include "permlift/solve.hpp"
#include "permlift/special.hpp"
#include "permlift/xform.hpp"

namespace permlift::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  bool json = false;
  bool quiet = false;
  unsigned threads = 1;
  std::uint64_t cap = 0;  // 0: library default
};

class Output {
 public:
  Output(std::ostream& out, const Common& common) : out_(out), common_(common) {}

  // Prose goes out only without --json and without --quiet.
  void line(const std::string& text) {
    if (!common_.json && !common_.quiet) out_ << text << "\n";
  }
  void json(const Json& doc) {
    if (common_.json) out_ << doc.dump(2) << "\n";
  }

 private:
  std::ostream& out_;
  const Common& common_;
};

SolveOptions solve_options(const Common& c) {
  SolveOptions o;
  o.threads = std::max(1u, c.threads);
  if (c.cap != 0) {
    o.node_cap = c.cap;
    o.brute_force_cap = c.cap;
  }
  return o;
}

std::string edge_text(const LabeledGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return g.name(ed.from) + (g.mode() == Mode::directed ? "->" : "-") + g.name(ed.to);
}

Json edge_json(const LabeledGraph& g, EdgeId e) {
  return Json{{"index", e}, {"from", g.name(g.edge(e).from)}, {"to", g.name(g.edge(e).to)}};
}

Json edges_json(const LabeledGraph& g, const std::vector<EdgeId>& edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back(edge_json(g, e));
  return out;
}

std::string edges_text(const LabeledGraph& g, const std::vector<EdgeId>& edges) {
  std::string out = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) out += (i ? "," : "") + edge_text(g, edges[i]);
  return out + "]";
}

Json names_json(const LabeledGraph& g, const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

std::string names_text(const LabeledGraph& g, const std::vector<VertexId>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + g.name(vs[i]);
  return out + "]";
}

Json assignment_json(const LabeledGraph& g, const VertexAssignment& k) {
  Json out = Json::object();
  for (VertexId v = 0; v < k.size(); ++v) out[g.name(v)] = k[v];
  return out;
}

std::string assignment_text(const LabeledGraph& g, const VertexAssignment& k) {
  std::string out;
  for (VertexId v = 0; v < k.size(); ++v) out += (v ? " " : "") + g.name(v) + ":" + std::to_string(k[v]);
  return out;
}

template <typename T>
std::string list_text(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::ostringstream s;
    s << xs[i];
    out += (i ? "," : "") + s.str();
  }
  return out + "]";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

// ---- commands ----

int cmd_solve(const std::string& file, const std::string& method, const Common& c, Output& o) {
  const LabeledGraph g = load_instance(file).graph;
  if (g.edge_count() == 0) throw InvalidInput("instance has no edges, so omega is undefined");
  const SolveOptions opts = solve_options(c);
  SolveResult r;
  if (method == "auto") {
    r = solve(g, opts);
  } else if (method == "tree") {
    r = tree_closed_form(g);
  } else if (method == "cycle") {
    r = cycle_closed_form(g);
  } else if (method == "bb") {
    r = beta_c_exact(g, opts);
  } else {
    throw InvalidInput("unknown method \"" + method + "\"");
  }
  const std::string omega = r.omega ? r.omega->to_string() : "undefined";
  o.line("beta_c=" + std::to_string(r.beta_c) + " beta_c_prime=" + std::to_string(r.beta_c_prime) +
         " omega=" + omega);
  o.line("method=" + std::string(to_string(r.method)) + " component_beta_c_prime=" +
         list_text(r.component_beta_c_prime));
  o.line("optimal=" + assignment_text(g, r.optimal));
  o.line("contradictions=" + edges_text(g, r.contradiction_edges));
  o.json(Json{{"beta_c", r.beta_c},
              {"beta_c_prime", r.beta_c_prime},
              {"component_beta_c_prime", r.component_beta_c_prime},
              {"omega", r.omega ? Json(omega) : Json(nullptr)},
              {"optimal", assignment_json(g, r.optimal)},
              {"contradiction_edges", edges_json(g, r.contradiction_edges)},
              {"method", to_string(r.method)}});
  return ok;
}

int cmd_lift(const std::string& file, const std::string& dot_path, const std::string& base_dot_path,
             Output& o) {
  const LabeledGraph g = load_instance(file).graph;
  const LiftGraph lift = build_lift(g);
  const ComponentSummary s = component_analysis(lift);
  std::vector<std::size_t> sizes;
  for (const auto& comp : s.components) sizes.push_back(comp.vertices.size());
  const bool self_check = lift_self_labeling_check(lift);
  const bool fiber_ok = fiber_degree_ok(lift);

  std::string head = "components=" + std::to_string(s.components.size()) + " sizes=" + list_text(sizes);
  std::vector<std::string> classes;
  for (const auto& b : s.per_base_component) classes.emplace_back(to_string(b.classification));
  head += s.classification ? " class=" + std::string(to_string(*s.classification)) : " classes=" + list_text(classes);
  o.line(head);
  o.line("isomorphic_to_base=" + std::to_string(s.isomorphic_to_base_count) + " self_check=" + bool_text(self_check) +
         " fiber_degree=" + bool_text(fiber_ok));

  Json per = Json::array();
  for (const auto& b : s.per_base_component) {
    per.push_back(Json{{"vertices", names_json(g, b.base_vertices)},
                       {"isomorphic_count", b.isomorphic_count},
                       {"classification", to_string(b.classification)}});
  }
  o.json(Json{{"lift_vertices", lift.vertex_count()},
              {"lift_edges", lift.edges.size()},
              {"components", s.components.size()},
              {"sizes", sizes},
              {"isomorphic_to_base_count", s.isomorphic_to_base_count},
              {"classification", s.classification ? Json(to_string(*s.classification)) : Json(nullptr)},
              {"per_base_component", per},
              {"self_check", self_check},
              {"fiber_degree", fiber_ok}});
  if (!dot_path.empty()) write_text_file(dot_path, lift_to_dot(lift));
  if (!base_dot_path.empty()) write_text_file(base_dot_path, base_to_dot(g));
  return ok;
}

int cmd_equiv(const std::string& file1, const std::string& file2, std::size_t max_vertices, const Common& c,
              std::ostream& out, Output& o) {
  const LabeledGraph g1 = load_instance(file1).graph;
  const LabeledGraph g2 = load_instance(file2).graph;
  EquivOptions opts;
  opts.max_vertices = max_vertices;
  if (c.cap != 0) opts.node_cap = c.cap;
  const auto w = are_equivalent(g1, g2, opts);
  if (!w) {
    o.line("not equivalent");
    o.json(Json{{"equivalent", false}});
    return negative_result;
  }
  witness_to_lift_isomorphism(*w, g1, g2);
  out << write_witness(*w, g1, g2);
  return ok;
}

int cmd_bipartize(const std::string& file, bool with_oracle, const Common& c, Output& o) {
  const LabeledGraph g = load_instance(file).graph;
  const BipartizationResult r = edge_bipartization(g, solve_options(c));
  std::optional<std::size_t> oracle;
  if (with_oracle) oracle = min_bipartization_by_deletion(g, c.cap ? c.cap : 10'000'000).size();
  o.line("beta_c2=" + std::to_string(r.beta_c2) + " deleted=" + edges_text(g, r.deleted_edges) +
         (oracle ? " oracle=" + std::to_string(*oracle) : ""));
  o.line("bipartition=" + names_text(g, r.residual_bipartition.first) + "|" +
         names_text(g, r.residual_bipartition.second));
  Json doc{{"beta_c2", r.beta_c2},
           {"deleted_edges", edges_json(g, r.deleted_edges)},
           {"bipartition", Json::array({names_json(g, r.residual_bipartition.first),
                                        names_json(g, r.residual_bipartition.second)})}};
  if (oracle) doc["oracle"] = *oracle;
  o.json(doc);
  return ok;
}

int cmd_signed(const std::string& file, const Common& c, Output& o) {
  const LabeledGraph g = load_instance(file).graph;
  const SignedReport r = signed_analyze(g, solve_options(c));
  o.line("balanced=" + bool_text(r.balanced) + " frustration=" + std::to_string(r.frustration));
  if (r.partition) {
    o.line("partition=" + names_text(g, r.partition->first) + "|" + names_text(g, r.partition->second));
  } else {
    o.line("frustrated=" + edges_text(g, r.frustrated_edges));
  }
  o.json(Json{{"balanced", r.balanced},
              {"frustration", r.frustration},
              {"partition", r.partition ? Json::array({names_json(g, r.partition->first),
                                                       names_json(g, r.partition->second)})
                                        : Json(nullptr)},
              {"frustrated_edges", edges_json(g, r.frustrated_edges)}});
  return ok;
}

int cmd_latin(const std::string& file, Output& o) {
  const LabeledGraph g = load_instance(file).graph;
  require_simple(g);
  if (is_single_cycle(g)) {
    const CycleClassification r = classify_cycle_latin(g);
    o.line("analysis=cycle kind=" + std::string(to_string(r.kind)) + " length=" + std::to_string(r.cycle.size()) +
           " pi_c=" + r.pi_c.to_cycle_string() + " count=" + std::to_string(r.assignment_count) +
           " class=" + std::string(to_string(r.verdict)) + " law=" + bool_text(r.law_holds));
    o.json(Json{{"analysis", "cycle"},
                {"kind", to_string(r.kind)},
                {"cycle", names_json(g, r.cycle)},
                {"pi_c", r.pi_c.to_string()},
                {"assignment_count", r.assignment_count},
                {"classification", to_string(r.verdict)},
                {"law_holds", r.law_holds}});
    return ok;
  }
  if (g.mode() == Mode::directed) {
    const DirectedLatinReport r = directed_lprime_classify(g);
    o.line("analysis=directed_lprime counts=" + list_text(r.component_counts) +
           " class=" + std::string(to_string(r.verdict)) + " law=" + bool_text(r.law_holds));
    o.json(Json{{"analysis", "directed_lprime"},
                {"component_counts", r.component_counts},
                {"classification", to_string(r.verdict)},
                {"law_holds", r.law_holds}});
    return ok;
  }
  if (underlying_properties(g).bipartite) {
    const BipartiteLatinReport r = bipartite_bad_witness(g);
    std::string text = "analysis=bipartite beta_c_prime=" + std::to_string(r.beta_c_prime) +
                       " complete_bipartite=" + bool_text(r.complete_bipartite);
    text += r.witness ? " witness=" + names_text(g, r.witness->cycle) + " pi_c=" + r.witness->pi_c.to_cycle_string()
                      : " witness=none";
    o.line(text);
    o.json(Json{{"analysis", "bipartite"},
                {"beta_c_prime", r.beta_c_prime},
                {"complete_bipartite", r.complete_bipartite},
                {"cycles_examined", r.cycles_examined},
                {"witness", r.witness ? Json{{"cycle", names_json(g, r.witness->cycle)},
                                             {"pi_c", r.witness->pi_c.to_string()}}
                                      : Json(nullptr)}});
    return ok;
  }
  const LatinBoundReport r = nonbipartite_latin_bound(g);
  o.line("analysis=nonbipartite beta_c_prime=" + std::to_string(r.beta_c_prime) + " bound=" + std::to_string(r.bound) +
         " holds=" + bool_text(r.holds));
  o.json(Json{{"analysis", "nonbipartite"}, {"beta_c_prime", r.beta_c_prime}, {"bound", r.bound}, {"holds", r.holds}});
  return ok;
}

int cmd_identify(const std::string& file, const std::string& v1, const std::string& v2, const std::string& name,
                 const std::string& policy, const std::string& out_path, bool bounds, const Common& c, Output& o) {
  const LabeledGraph g = load_instance(file).graph;
  IdentifySpec spec{g.vertex(v1), g.vertex(v2), name, ConflictPolicy::prefer_v1};
  if (policy == "reject") {
    spec.policy = ConflictPolicy::reject;
  } else if (policy != "prefer_v1") {
    throw InvalidInput("unknown conflict policy \"" + policy + "\"");
  }
  const IdentifyResult h = identify(g, spec);
  Json dropped = Json::array();
  std::string dropped_text;
  for (const DroppedEdge& d : h.dropped) {
    const char* reason = d.reason == DropReason::joins_identified ? "joins_identified" : "common_neighbor";
    Json item = edge_json(g, d.edge);
    item["reason"] = reason;
    if (d.kept) item["kept"] = *d.kept;
    dropped.push_back(std::move(item));
    dropped_text += (dropped_text.empty() ? "" : ",") + edge_text(g, d.edge) + "(" + reason + ")";
  }
  o.line("merged=" + h.graph.name(h.merged) + " vertices=" + std::to_string(h.graph.vertex_count()) +
         " edges=" + std::to_string(h.graph.edge_count()) + " dropped=[" + dropped_text + "]");
  Json doc{{"merged", h.graph.name(h.merged)},
           {"vertices", h.graph.vertex_count()},
           {"edges", h.graph.edge_count()},
           {"dropped", dropped}};

  if (bounds) {
    const IdentifyBounds b = check_identify_bounds(g, spec, solve_options(c));
    o.line("beta_c_g=" + std::to_string(b.beta_c_g) + " beta_c_h=" + std::to_string(b.beta_c_h) +
           " min_degree=" + std::to_string(b.min_degree) +
           " lower=" + (b.lower_holds ? bool_text(*b.lower_holds) : std::string("skipped")) +
           " lower_by_dropped=" + bool_text(b.lower_by_dropped_holds) + " upper=" + bool_text(b.upper_holds));
    Json bj{{"beta_c_g", b.beta_c_g},
            {"beta_c_h", b.beta_c_h},
            {"min_degree", b.min_degree},
            {"dropped", b.dropped},
            {"same_component", b.same_component},
            {"lower_holds", b.lower_holds ? Json(*b.lower_holds) : Json(nullptr)},
            {"lower_by_dropped_holds", b.lower_by_dropped_holds},
            {"upper_holds", b.upper_holds},
            {"shared", nullptr}};
    if (b.shared) {
      const SharedValueCheck& s = *b.shared;
      o.line("beta_prime_first=" + std::to_string(s.beta_prime_first) + " beta_prime_second=" +
             std::to_string(s.beta_prime_second) + " beta_prime_merged=" + std::to_string(s.beta_prime_merged) +
             " shared=" + list_text(s.shared) + " bounds=" + bool_text(s.lower_holds && s.upper_holds) +
             " pigeonhole=" + (s.pigeonhole_applies ? bool_text(s.pigeonhole_holds) : std::string("n/a")));
      bj["shared"] = Json{{"values_v1", s.values_v1},
                          {"values_v2", s.values_v2},
                          {"shared", s.shared},
                          {"beta_prime_first", s.beta_prime_first},
                          {"beta_prime_second", s.beta_prime_second},
                          {"beta_prime_merged", s.beta_prime_merged},
                          {"beta_c_merged", s.beta_c_merged},
                          {"lower_holds", s.lower_holds},
                          {"upper_holds", s.upper_holds},
                          {"intersection_holds", s.intersection_holds},
                          {"pigeonhole_applies", s.pigeonhole_applies},
                          {"pigeonhole_holds", s.pigeonhole_holds}};
    }
    doc["bounds"] = std::move(bj);
  }
  o.json(doc);
  if (!out_path.empty()) save_instance(h.graph, out_path);
  return ok;
}

int cmd_oracle(const std::string& file, const Common& c, Output& o) {
  const LabeledGraph g = load_instance(file).graph;
  require_simple(g);
  const OracleReport r = brute_force(g, c.cap ? c.cap : 10'000'000);
  const std::string omega = g.edge_count() ? game_value(g, r.beta_c).omega.to_string() : "undefined";
  o.line("beta_c=" + std::to_string(r.beta_c) + " beta_c_prime=" + std::to_string(r.beta_c_prime) + " omega=" + omega);
  o.line("enumerated=" + std::to_string(r.enumerated) + " optima=" + std::to_string(r.all_optimal.size()));
  Json optima = Json::array();
  for (const auto& k : r.all_optimal) optima.push_back(assignment_json(g, k));
  o.json(Json{{"beta_c", r.beta_c},
              {"beta_c_prime", r.beta_c_prime},
              {"omega", g.edge_count() ? Json(omega) : Json(nullptr)},
              {"enumerated", r.enumerated},
              {"all_optimal", optima}});
  return ok;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err,
            const Common& c) {
  const LabeledGraph g = generate(spec);
  const std::string seed = "seed=" + std::to_string(spec.seed);
  if (out_path.empty()) {
    out << write_instance(g);
    if (!c.quiet) err << seed << "\n";
  } else {
    save_instance(g, out_path);
    if (c.json) {
      out << Json{{"seed", spec.seed}, {"path", out_path}}.dump(2) << "\n";
    } else if (!c.quiet) {
      out << seed << " wrote " << out_path << "\n";
    }
  }
  return ok;
}

int cmd_validate(const std::string& file, Output& o) {
  const LabeledGraph g = load_instance(file).graph;
  const auto violations = validate(g);
  Json list = Json::array();
  bool fatal = false;
  for (const Violation& v : violations) {
    const char* kind = v.kind == ViolationKind::self_loop        ? "self_loop"
                       : v.kind == ViolationKind::duplicate_edge ? "duplicate_edge"
                                                                 : "non_involution";
    fatal = fatal || v.kind != ViolationKind::non_involution;
    o.line(std::string(kind) + " edge=" + std::to_string(v.edge) + ": " + v.message);
    list.push_back(Json{{"kind", kind}, {"edge", v.edge}, {"message", v.message}});
  }
  if (violations.empty()) o.line("ok");
  o.json(Json{{"violations", list}});
  return fatal ? invalid_input : ok;
}

void add_common(CLI::App* sub, Common& c, bool solver_flags) {
  sub->add_flag("--json", c.json, "Print a JSON report instead of prose");
  sub->add_flag("--quiet", c.quiet, "Suppress prose output");
  if (solver_flags) {
    sub->add_option("--threads", c.threads, "Worker threads for exact search")->check(CLI::Range(1u, 256u));
    sub->add_option("--cap", c.cap, "Search cap (nodes or assignments)");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of permutation-labelled graphs", "permlift"};
  app.require_subcommand(1);
  Common c;
  std::string file, file2, method = "auto", dot_path, base_dot_path, v1, v2, new_name, policy = "prefer_v1", out_path;
  std::string model = "gnp", labels = "uniform_involutions";
  std::size_t max_vertices = 10;
  bool with_oracle = false, no_bounds = false;
  GenSpec spec;

  auto* solve_cmd = app.add_subcommand("solve", "Contradiction and assignment numbers");
  solve_cmd->add_option("file", file, "Instance JSON")->required();
  solve_cmd->add_option("--method", method, "auto, tree, cycle or bb");
  add_common(solve_cmd, c, true);

  auto* lift_cmd = app.add_subcommand("lift", "Build the permutation graph and analyse its components");
  lift_cmd->add_option("file", file, "Instance JSON")->required();
  lift_cmd->add_option("--dot", dot_path, "Write the lift as DOT");
  lift_cmd->add_option("--base-dot", base_dot_path, "Write the base graph as DOT");
  add_common(lift_cmd, c, false);

  auto* equiv_cmd = app.add_subcommand("equiv", "Switching equivalence with a witness");
  equiv_cmd->add_option("file1", file, "First instance")->required();
  equiv_cmd->add_option("file2", file2, "Second instance")->required();
  equiv_cmd->add_option("--max-vertices", max_vertices, "Vertex cap for the isomorphism search");
  add_common(equiv_cmd, c, true);

  auto* bip_cmd = app.add_subcommand("bipartize", "Minimum edge deletions to a bipartite graph");
  bip_cmd->add_option("file", file, "Instance JSON (labels ignored)")->required();
  bip_cmd->add_flag("--oracle", with_oracle, "Cross-check by exhaustive deletion");
  add_common(bip_cmd, c, true);

  auto* signed_cmd = app.add_subcommand("signed", "Balance and frustration of an n = 2 labelling");
  signed_cmd->add_option("file", file, "Instance JSON")->required();
  add_common(signed_cmd, c, true);

  auto* latin_cmd = app.add_subcommand("latin", "Classify a Latin-square labelling");
  latin_cmd->add_option("file", file, "Instance JSON")->required();
  add_common(latin_cmd, c, false);

  auto* ident_cmd = app.add_subcommand("identify", "Identify two vertices and check the bounds");
  ident_cmd->add_option("file", file, "Instance JSON")->required();
  ident_cmd->add_option("v1", v1, "Vertex kept in place")->required();
  ident_cmd->add_option("v2", v2, "Vertex merged into v1")->required();
  ident_cmd->add_option("--name", new_name, "Name of the merged vertex");
  ident_cmd->add_option("--policy", policy, "prefer_v1 or reject");
  ident_cmd->add_option("--out", out_path, "Write the identified instance");
  ident_cmd->add_flag("--no-bounds", no_bounds, "Skip the inequality checks");
  add_common(ident_cmd, c, true);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration of all assignments");
  oracle_cmd->add_option("file", file, "Instance JSON")->required();
  add_common(oracle_cmd, c, true);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--model", model, "gnp, cycle, tree or complete_bipartite");
  gen_cmd->add_option("--size,--len", spec.size, "Vertices, cycle length, or first side");
  gen_cmd->add_option("--t", spec.other_side, "Second side of a complete bipartite graph");
  gen_cmd->add_option("--p", spec.p, "Edge probability for gnp");
  gen_cmd->add_option("--n", spec.n, "Label degree");
  gen_cmd->add_option("--labels", labels,
                      "uniform_involutions, uniform_sn, latin_L, latin_Lprime or all_neg");
  gen_cmd->add_option("--seed", spec.seed, "64-bit seed");
  gen_cmd->add_option("--out", out_path, "Output path (default: standard output)");
  add_common(gen_cmd, c, false);

  auto* validate_cmd = app.add_subcommand("validate", "Report structural problems");
  validate_cmd->add_option("file", file, "Instance JSON")->required();
  add_common(validate_cmd, c, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }

  Output o(out, c);
  try {
    if (solve_cmd->parsed()) return cmd_solve(file, method, c, o);
    if (lift_cmd->parsed()) return cmd_lift(file, dot_path, base_dot_path, o);
    if (equiv_cmd->parsed()) return cmd_equiv(file, file2, max_vertices, c, out, o);
    if (bip_cmd->parsed()) return cmd_bipartize(file, with_oracle, c, o);
    if (signed_cmd->parsed()) return cmd_signed(file, c, o);
    if (latin_cmd->parsed()) return cmd_latin(file, o);
    if (ident_cmd->parsed()) return cmd_identify(file, v1, v2, new_name, policy, out_path, !no_bounds, c, o);
    if (oracle_cmd->parsed()) return cmd_oracle(file, c, o);
    if (gen_cmd->parsed()) {
      spec.model = parse_model(model);
      spec.labels = parse_label_source(labels);
      return cmd_gen(spec, out_path, out, err, c);
    }
    if (validate_cmd->parsed()) return cmd_validate(file, o);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return resource_limit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
  return invalid_input;
}

}  // namespace permlift::cli
