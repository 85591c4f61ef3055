#include "kgraphkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace kgraphkit {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<Degree> parse_csv_degree(std::string_view s) {
  std::vector<int> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const auto v = parse_int(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!v || *v < 0 || *v > 1'000'000) return std::nullopt;
    entries.push_back(static_cast<int>(*v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Degree(std::move(entries));
}

bool writable_id(const std::string& id) {
  return !id.empty() && std::none_of(id.begin(), id.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#' || c == '=';
  });
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* palette(int color) {
  static constexpr const char* kColors[] = {"blue", "red", "darkgreen", "orange", "purple", "brown", "magenta", "gray40"};
  return kColors[color % 8];
}

void emit_edges(std::ostringstream& os, const KGraph& g, const std::vector<std::string>& node_names) {
  for (const Edge& e : g.edges())
    os << "  " << quote(node_names[e.source]) << " -> " << quote(node_names[e.range]) << " [label=" << quote(e.id)
       << ", color=" << palette(e.color) << ", fontcolor=" << palette(e.color) << "];\n";
}

}  // namespace

void BudgetOverride::apply_to(BudgetConfig& budget) const {
  if (degree) budget.degree_bound = *degree;
  if (presentation) budget.presentation_bound = *presentation;
  if (saturation) budget.saturation_bound = *saturation;
}

BudgetOverride BudgetOverride::merged(const BudgetOverride& later) const {
  BudgetOverride out = *this;
  if (later.degree) out.degree = later.degree;
  if (later.presentation) out.presentation = later.presentation;
  if (later.saturation) out.saturation = later.saturation;
  return out;
}

std::string BudgetOverride::to_string() const {
  std::string s;
  auto add = [&](const std::string& part) { s += (s.empty() ? "" : " ") + part; };
  if (degree) add("degree=" + degree->to_csv());
  if (presentation) add("presentation=" + std::to_string(*presentation));
  if (saturation) add("saturation=" + saturation->to_csv());
  return s;
}

BudgetOverride parse_budget_override(std::string_view text) {
  BudgetOverride out;
  for (const Token& t : tokenize(text)) {
    const auto eq = t.text.find('=');
    const std::string_view key = t.text.substr(0, eq);
    const std::string_view value = eq == std::string_view::npos ? std::string_view{} : t.text.substr(eq + 1);
    const std::string shown(t.text);
    if (key == "degree" && !out.degree) {
      out.degree = parse_csv_degree(value);
      if (!out.degree) throw Error(ErrorKind::BadDegree, "bad degree bound '" + shown + "'");
    } else if (key == "saturation" && !out.saturation) {
      out.saturation = parse_csv_degree(value);
      if (!out.saturation) throw Error(ErrorKind::BadDegree, "bad saturation bound '" + shown + "'");
    } else if (key == "presentation" && !out.presentation) {
      const auto v = parse_int(value);
      if (!v || *v <= 0 || *v > 1'000'000) throw Error(ErrorKind::BadDegree, "bad presentation bound '" + shown + "'");
      out.presentation = static_cast<int>(*v);
    } else {
      throw Error(ErrorKind::BadDegree, "unexpected budget setting '" + shown + "'");
    }
  }
  return out;
}

KGraphFile parse_kgraph(std::string_view text) {
  KGraphFile out;
  bool have_rank = false;
  bool have_budget = false;
  std::set<std::string> vertex_ids, edge_ids;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto fail = [&](const Token& t, const std::string& what) -> ParseError { return ParseError(line_no, t.column, what); };
    auto expect_count = [&](std::size_t n, const char* form) {
      if (tokens.size() != n) {
        const Token& at = tokens.size() > n ? tokens[n] : tokens.back();
        throw fail(at, std::string("expected '") + form + "'");
      }
    };
    const std::string_view keyword = tokens[0].text;

    if (keyword == "rank") {
      if (have_rank) throw fail(tokens[0], "rank given twice");
      expect_count(2, "rank <k>");
      const auto k = parse_int(tokens[1].text);
      if (!k || *k < 1 || *k > 32) throw fail(tokens[1], "rank must be an integer in 1..32");
      out.spec.rank = static_cast<int>(*k);
      have_rank = true;
      continue;
    }
    if (!have_rank) throw fail(tokens[0], "the first record must be 'rank <k>'");

    if (keyword == "vertex") {
      expect_count(2, "vertex <id>");
      const std::string id(tokens[1].text);
      if (!vertex_ids.insert(id).second) throw fail(tokens[1], "duplicate vertex id '" + id + "'");
      out.spec.vertices.push_back(id);
    } else if (keyword == "edge") {
      expect_count(5, "edge <id> color=<i> range=<vid> source=<vid>");
      KGraphSpec::EdgeSpec e;
      e.id = std::string(tokens[1].text);
      if (!edge_ids.insert(e.id).second) throw fail(tokens[1], "duplicate edge id '" + e.id + "'");
      std::set<std::string_view> seen;
      for (std::size_t i = 2; i < 5; ++i) {
        const auto eq = tokens[i].text.find('=');
        if (eq == std::string_view::npos) throw fail(tokens[i], "expected key=value");
        const std::string_view key = tokens[i].text.substr(0, eq);
        const std::string_view value = tokens[i].text.substr(eq + 1);
        if (!seen.insert(key).second) throw fail(tokens[i], "'" + std::string(key) + "' given twice");
        if (value.empty()) throw fail(tokens[i], "empty value for '" + std::string(key) + "'");
        if (key == "color") {
          const auto c = parse_int(value);
          if (!c || *c < 1 || *c > out.spec.rank)
            throw fail(tokens[i], "color must be an integer in 1.." + std::to_string(out.spec.rank));
          e.color = static_cast<int>(*c);
        } else if (key == "range") {
          e.range = std::string(value);
        } else if (key == "source") {
          e.source = std::string(value);
        } else {
          throw fail(tokens[i], "unknown key '" + std::string(key) + "'");
        }
      }
      out.spec.edges.push_back(std::move(e));
    } else if (keyword == "square") {
      expect_count(6, "square <f> <g> = <g2> <f2>");
      if (tokens[3].text != "=") throw fail(tokens[3], "expected '='");
      out.spec.squares.push_back({std::string(tokens[1].text), std::string(tokens[2].text),
                                  std::string(tokens[4].text), std::string(tokens[5].text)});
    } else if (keyword == "budget") {
      if (have_budget) throw fail(tokens[0], "budget given twice");
      have_budget = true;
      try {
        out.budget = parse_budget_override(line.substr(tokens[0].text.size() + tokens[0].column - 1));
      } catch (const Error& e) {
        throw fail(tokens.size() > 1 ? tokens[1] : tokens[0], e.what());
      }
      if (out.budget.empty()) throw fail(tokens[0], "empty budget record");
    } else {
      throw fail(tokens[0], "unknown record '" + std::string(keyword) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_rank) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'rank <k>' record");
  return out;
}

std::string serialize_kgraph(const KGraph& g, const BudgetOverride& budget) {
  const KGraphSpec spec = g.to_spec();
  auto check = [](const std::string& id) {
    if (!writable_id(id)) throw Error(ErrorKind::ParseError, "id '" + id + "' cannot be written to a k-graph file");
  };
  std::ostringstream os;
  os << "rank " << spec.rank << "\n";
  for (const auto& v : spec.vertices) {
    check(v);
    os << "vertex " << v << "\n";
  }
  for (const auto& e : spec.edges) {
    check(e.id);
    os << "edge " << e.id << " color=" << e.color << " range=" << e.range << " source=" << e.source << "\n";
  }
  for (const auto& s : spec.squares) os << "square " << s.f << " " << s.g << " = " << s.g2 << " " << s.f2 << "\n";
  if (!budget.empty()) os << "budget " << budget.to_string() << "\n";
  return os.str();
}

std::string export_dot(const KGraph& g) {
  std::ostringstream os;
  os << "digraph kgraph {\n";
  std::vector<std::string> names;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    names.push_back(g.vertex_name(v));
    os << "  " << quote(names.back()) << ";\n";
  }
  emit_edges(os, g, names);
  os << "}\n";
  return os.str();
}

std::string export_dot(const KGraph& g, const DesWindow& window) {
  std::ostringstream os;
  os << "digraph window {\n";
  std::vector<std::string> names;
  for (VertexId v = 0; v < static_cast<VertexId>(window.vertices.size()); ++v) {
    names.push_back(label(g, window.vertices[v]));
    os << "  " << quote(names.back()) << (window.interior[v] ? "" : " [style=dashed]") << ";\n";
  }
  emit_edges(os, window.graph, names);
  os << "}\n";
  return os.str();
}

std::string export_dot(const KGraph& g, const DecompositionReport& report) {
  std::ostringstream os;
  os << "digraph decomposition {\n";
  std::vector<std::string> names;
  std::vector<bool> placed(g.vertex_count(), false);
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) names.push_back(g.vertex_name(v));
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    os << "  subgraph cluster_" << i << " {\n    label=" << quote("K" + std::to_string(i + 1)) << ";\n";
    for (VertexId v : report.components[i].summand.members()) {
      os << "    " << quote(names[v]) << ";\n";
      placed[v] = true;
    }
    os << "  }\n";
  }
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (!placed[v]) os << "  " << quote(names[v]) << ";\n";
  emit_edges(os, g, names);
  os << "}\n";
  return os.str();
}

}  // namespace kgraphkit
