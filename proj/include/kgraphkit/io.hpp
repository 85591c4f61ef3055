#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kgraphkit/budget.hpp"
#include "kgraphkit/decompose.hpp"
#include "kgraphkit/desourcify.hpp"
#include "kgraphkit/error.hpp"
#include "kgraphkit/kgraph.hpp"

namespace kgraphkit {

/// Error at a 1-based line and column of a k-graph file.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Partial budget from a `budget` record, a flag or the environment.
struct BudgetOverride {
  std::optional<Degree> degree;
  std::optional<int> presentation;
  std::optional<Degree> saturation;

  bool empty() const noexcept { return !degree && !presentation && !saturation; }
  void apply_to(BudgetConfig& budget) const;
  /// Later settings win.
  BudgetOverride merged(const BudgetOverride& later) const;
  std::string to_string() const;
};

/// "degree=6,6 presentation=8 saturation=3,3", any subset in any order.
/// Throws BadDegree.
BudgetOverride parse_budget_override(std::string_view text);

struct KGraphFile {
  KGraphSpec spec;
  BudgetOverride budget;
};

/// Line grammar:
///   rank <k>
///   vertex <id>
///   edge <id> color=<i> range=<vid> source=<vid>
///   square <f> <g> = <g2> <f2>
///   budget degree=<a,b,...> presentation=<n> saturation=<a,b,...>
/// `#` starts a comment. Throws ParseError.
KGraphFile parse_kgraph(std::string_view text);

/// Canonical text; parse_kgraph(serialize_kgraph(g)) rebuilds g.
std::string serialize_kgraph(const KGraph& g, const BudgetOverride& budget = {});

std::string export_dot(const KGraph& g);
std::string export_dot(const KGraph& g, const DesWindow& window);
std::string export_dot(const KGraph& g, const DecompositionReport& report);

}  // namespace kgraphkit
