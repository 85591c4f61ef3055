#include "kgraphkit/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kgraphkit/decompose.hpp"
#include "kgraphkit/desourcify.hpp"
#include "kgraphkit/io.hpp"
#include "kgraphkit/periodicity.hpp"
#include "kgraphkit/tails_prim.hpp"

namespace kgraphkit {
namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kCommands = {"validate", "shape",     "paths",      "ideals", "tails",
                                            "periodicity", "prim", "decompose", "desourcify", "chains"};
constexpr std::size_t kPathListCap = 500;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An analysis-level negative with a partial report.
struct Negative {
  Json report;
};

Json names(const KGraph& g, const VertexSet& s) {
  Json a = Json::array();
  for (VertexId v : s.members()) a.push_back(g.vertex_name(v));
  return a;
}

Json int_vector(const IntVector& v) {
  Json a = Json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

Json subgroup(const IntSubgroup& g) {
  Json a = Json::array();
  for (const auto& row : g.basis()) a.push_back(int_vector(row));
  return a;
}

Json path_json(const KGraph& g, const Path& p) {
  return Json{{"range", g.vertex_name(p.range)},
              {"source", g.vertex_name(p.source)},
              {"degree", p.degree.to_csv()},
              {"path", describe(g, p)}};
}

Json verdict_json(const KGraph& g, const PeriodicityVerdict& v) {
  Json j{{"status", to_string(v.status)}, {"criterion", v.criterion}};
  if (v.witness) j["witness"] = Json::array({describe(g, v.witness->first), describe(g, v.witness->second)});
  return j;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !is_flat(x))) return false;
  return true;
}

std::string flat_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat_text(j[i]);
  return s + "]";
}

void render(std::ostringstream& os, const Json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      render(os, value, indent + "  ");
    } else if (value.is_array() && !is_flat(value)) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << indent << key << "[" << i << "]:";
        if (value[i].is_object()) {
          os << "\n";
          render(os, value[i], indent + "  ");
        } else {
          os << " " << flat_text(value[i]) << "\n";
        }
      }
      if (value.empty()) os << indent << key << ": []\n";
    } else {
      os << indent << key << ": " << flat_text(value) << "\n";
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

void require_locally_convex(const KGraph& g) {
  const ShapeReport shape = check_shape(g);
  if (!shape.locally_convex)
    throw Negative{Json{{"error", {{"kind", "PreconditionViolated"}, {"message", "the graph is not locally convex"}}}}};
}

struct Context {
  const KGraph& g;
  BudgetConfig budget;
  Degree window;
  std::optional<std::string> dot_path;
};

Json cmd_validate(const Context& c) {
  const ShapeReport shape = check_shape(c.g);
  return Json{{"valid", true},
              {"rank", c.g.rank()},
              {"vertices", c.g.vertex_count()},
              {"edges", c.g.edge_count()},
              {"squares", c.g.squares().size()},
              {"locally_convex", shape.locally_convex}};
}

Json cmd_shape(const Context& c) {
  const ShapeReport shape = check_shape(c.g);
  Json sources = Json::array();
  for (const auto& [v, color] : shape.sources) sources.push_back(Json{{"vertex", c.g.vertex_name(v)}, {"color", color + 1}});
  Json j{{"locally_convex", shape.locally_convex}, {"sources", sources}};
  if (!shape.locally_convex) throw Negative{j};
  return j;
}

Json cmd_paths(const Context& c) {
  require_locally_convex(c.g);
  Json list = Json::array();
  std::size_t total = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(c.g.vertex_count()); ++v)
    for (const auto& p : paths_up_to(c.g, v, c.budget.degree_bound)) {
      if (total++ < kPathListCap) list.push_back(path_json(c.g, p));
    }
  Json boundary = Json::array();
  for (VertexId v = 0; v < static_cast<VertexId>(c.g.vertex_count()); ++v) {
    Json xs = Json::array();
    for (const auto& x : enumerate_boundary(c.g, v, c.budget.presentation_bound)) xs.push_back(describe(c.g, x));
    boundary.push_back(Json{{"vertex", c.g.vertex_name(v)}, {"paths", xs}});
  }
  return Json{{"path_count", total}, {"listed", list.size()}, {"paths", list}, {"boundary_paths", boundary}};
}

Json cmd_ideals(const Context& c) {
  require_locally_convex(c.g);
  const HSLattice lattice = enumerate_hs_lattice(c.g, c.budget);
  Json els = Json::array();
  for (const auto& h : lattice.elements) els.push_back(names(c.g, h));
  return Json{{"size", lattice.size()}, {"cofinal", lattice.size() == 2}, {"lattice", els}};
}

Json cmd_tails(const Context& c) {
  require_locally_convex(c.g);
  Json tails = Json::array();
  for (const auto& t : aperiodic_tails(c.g, c.budget))
    tails.push_back(Json{{"members", names(c.g, t.tail.members)},
                         {"complement", names(c.g, t.tail.complement)},
                         {"verdict", to_string(t.verdict.status)},
                         {"criterion", t.verdict.criterion}});
  return Json{{"count", tails.size()}, {"tails", tails}};
}

Json cmd_periodicity(const Context& c) {
  require_locally_convex(c.g);
  EquivalenceOracle oracle(c.g, c.budget);
  const PerResult per = per_group(oracle);
  const HPerResult h = h_per(oracle, per.group);
  return Json{{"per",
               {{"generators", subgroup(per.group)},
                {"rank", per.group.rank()},
                {"exact", per.exact},
                {"stabilized", per.stabilized},
                {"tested_pairs", per.tested_pairs},
                {"unknown_pairs", per.unknown_pairs}}},
              {"verdict", verdict_json(c.g, aperiodicity(c.g, c.budget))},
              {"h_per", {{"members", names(c.g, h.members)}, {"exact", names(c.g, h.exact)}}}};
}

Json cmd_prim(const Context& c) {
  require_locally_convex(c.g);
  const HSLattice lattice = enumerate_hs_lattice(c.g, c.budget);
  const auto catalogue = prim_catalogue(c.g, c.budget);
  const auto flags = classify_prim(c.g, catalogue, lattice, c.budget);
  Json records = Json::array();
  for (std::size_t i = 0; i < catalogue.size(); ++i) {
    const PrimIdeal& p = catalogue[i];
    Json character = Json::array();
    for (const auto& t : p.sample_character) character.push_back(t.to_string());
    Json relations = Json::array();
    for (const auto& r : p.relations)
      relations.push_back(Json{{"mu", describe(p.tail_graph, r.mu)},
                               {"nu", describe(p.tail_graph, r.nu)},
                               {"shift", int_vector(r.shift)},
                               {"phase", r.phase.to_string()}});
    records.push_back(Json{{"tail", names(c.g, p.tail.members)},
                           {"killed", names(c.g, p.tail.complement)},
                           {"per", subgroup(p.per)},
                           {"per_exact", p.per_exact},
                           {"character_rank", p.character_rank},
                           {"sample_character", character},
                           {"verdict", to_string(p.verdict.status)},
                           {"h_per", names(p.tail_graph, p.h_per.members)},
                           {"flags",
                            {{"gauge_invariant", flags[i].gauge_invariant},
                             {"maximal_ideal", flags[i].maximal_ideal},
                             {"cofinal_graph", flags[i].cofinal_graph},
                             {"strongly_aperiodic", flags[i].strongly_aperiodic}}},
                           {"relations", relations}});
  }
  return Json{{"count", catalogue.size()}, {"records", records}};
}

Json cmd_decompose(const Context& c) {
  require_locally_convex(c.g);
  const DecompositionReport r = decompose(c.g, c.budget);
  if (c.dot_path) write_file(*c.dot_path, export_dot(c.g, r));
  Json chain = Json::array();
  for (const auto& h : r.chain.elements) chain.push_back(names(c.g, h));
  Json comps = Json::array();
  for (const auto& comp : r.components) {
    Json vs = Json::array();
    for (VertexId v = 0; v < static_cast<VertexId>(comp.graph.vertex_count()); ++v) vs.push_back(comp.graph.vertex_name(v));
    comps.push_back(Json{{"summand", names(c.g, comp.summand)}, {"vertices", vs}, {"edges", comp.graph.edge_count()}});
  }
  return Json{{"n", r.n}, {"unique", r.unique}, {"chain", chain}, {"components", comps}};
}

Json cmd_desourcify(const Context& c) {
  require_locally_convex(c.g);
  const DesWindow w = des_window(c.g, c.window);
  if (c.dot_path) write_file(*c.dot_path, export_dot(c.g, w));
  Json vs = Json::array();
  bool sourceless = true;
  for (VertexId v = 0; v < static_cast<VertexId>(w.vertices.size()); ++v) {
    vs.push_back(Json{{"label", label(c.g, w.vertices[v])}, {"interior", static_cast<bool>(w.interior[v])}});
    if (w.interior[v])
      for (int i = 0; i < w.graph.rank(); ++i) sourceless = sourceless && w.graph.has_color(v, i);
  }
  Json es = Json::array();
  for (EdgeId e = 0; e < static_cast<EdgeId>(w.edges.size()); ++e)
    es.push_back(Json{{"id", w.graph.edge(e).id}, {"color", w.graph.edge(e).color + 1}, {"element", describe(c.g, w.edges[e])}});
  return Json{{"window", w.bound.to_csv()},
              {"vertex_count", vs.size()},
              {"edge_count", es.size()},
              {"interior_has_no_sources", sourceless},
              {"vertices", vs},
              {"edges", es}};
}

Json cmd_chains(const Context& c) {
  require_locally_convex(c.g);
  const ChainsResult r = chains(c.g, c.budget);
  Json list = Json::array();
  for (const auto& ch : r.maximal) {
    Json els = Json::array();
    for (const auto& h : ch.elements) els.push_back(names(c.g, h));
    list.push_back(els);
  }
  return Json{{"max_length", r.max_length}, {"maximal_count", r.maximal.size()}, {"maximal", list}};
}

Json dispatch(const std::string& command, const Context& c) {
  if (command == "validate") return cmd_validate(c);
  if (command == "shape") return cmd_shape(c);
  if (command == "paths") return cmd_paths(c);
  if (command == "ideals") return cmd_ideals(c);
  if (command == "tails") return cmd_tails(c);
  if (command == "periodicity") return cmd_periodicity(c);
  if (command == "prim") return cmd_prim(c);
  if (command == "decompose") return cmd_decompose(c);
  if (command == "desourcify") return cmd_desourcify(c);
  return cmd_chains(c);
}

std::string format(const Json& doc, bool json) {
  if (json) return doc.dump(2) + "\n";
  std::ostringstream os;
  render(os, doc, "");
  return os.str();
}

}  // namespace

RunResult run(const std::vector<std::string>& args, const std::optional<std::string>& env_budget) {
  CLI::App app{"Ideal-structure invariants of finite k-graphs", "kgraphkit"};
  std::string command, file, degree, saturation, dot;
  std::optional<int> presentation, window;
  bool json = false;
  app.add_option("command", command, "Analysis to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("file", file, "k-graph file")->required();
  app.add_option("--budget-degree", degree, "Degree bound, e.g. 6,6");
  app.add_option("--budget-presentation", presentation, "Boundary presentation size bound");
  app.add_option("--budget-saturation", saturation, "Saturation horizon, e.g. 4,4");
  app.add_option("--window", window, "Desourcification window N (all colours)")->check(CLI::Range(1, 64));
  app.add_flag("--json", json, "Emit JSON (schema kgraphkit/1)");
  app.add_option("--dot", dot, "Write a DOT rendering to this path");

  std::vector<std::string> storage{"kgraphkit"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  RunResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n" + app.help();
    result.exit_code = 2;
    return result;
  }

  Json doc{{"schema", "kgraphkit/1"}, {"command", command}, {"file", file}};
  std::string text;
  try {
    text = read_file(file);
  } catch (const UsageError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
    return result;
  }

  // Parse and build first: a malformed file is a validation failure.
  std::optional<KGraph> graph;
  KGraphFile parsed;
  try {
    parsed = parse_kgraph(text);
    graph = KGraph::build(parsed.spec);
  } catch (const Error& e) {
    doc["result"] = Json{{"valid", false}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    result.out = format(doc, json);
    result.exit_code = 1;
    return result;
  }
  const KGraph& g = *graph;

  BudgetConfig budget = BudgetConfig::defaults(g);
  Degree window_bound(g.rank(), window.value_or(2));
  try {
    BudgetOverride over;
    if (env_budget && !env_budget->empty()) over = parse_budget_override(*env_budget);
    over = over.merged(parsed.budget);
    BudgetOverride flags;
    if (!degree.empty()) flags = flags.merged(parse_budget_override("degree=" + degree));
    if (presentation) flags.presentation = *presentation;
    if (!saturation.empty()) flags = flags.merged(parse_budget_override("saturation=" + saturation));
    over.merged(flags).apply_to(budget);
    budget.validate(g.rank());
  } catch (const Error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
    return result;
  }
  doc["budget"] = Json{{"degree", budget.degree_bound.to_csv()},
                       {"presentation", budget.presentation_bound},
                       {"saturation", budget.saturation_bound.to_csv()}};

  const Context ctx{g, budget, window_bound, dot.empty() ? std::nullopt : std::optional<std::string>(dot)};
  try {
    if (ctx.dot_path && command != "decompose" && command != "desourcify") write_file(dot, export_dot(g));
    doc["result"] = dispatch(command, ctx);
  } catch (const Negative& n) {
    doc["result"] = n.report;
    result.exit_code = 1;
  } catch (const UsageError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
    return result;
  } catch (const Error& e) {
    doc["result"] = Json{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    result.exit_code = 1;
  }
  result.out = format(doc, json);
  return result;
}

}  // namespace kgraphkit
