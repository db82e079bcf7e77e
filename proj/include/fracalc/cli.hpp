#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fracalc/operators.hpp"

namespace fracalc::cli {

enum class Command { eval, table1, compare, residual };
enum class OutputFormat { csv, json };

struct RunSpec {
  Command command = Command::eval;
  std::string expr_text;
  std::string expr_u;
  std::string expr_g;
  double alpha = 0.5;
  /// Apply I^alpha instead of D^alpha.
  bool integral = false;
  std::vector<double> points;
  int terms = 256;
  std::vector<Method> methods{Method::series};
  OutputFormat format = OutputFormat::csv;
  int gl_n = 256;
  bool shift = true;
  double b = 0.0;
  int k = 0;
};

/// "start:stop:step" (stop included within half a step), a comma-separated
/// list, or a single number. Throws std::invalid_argument when malformed,
/// empty, or containing a point <= 0.
std::vector<double> parse_grid(std::string_view text);

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view name);

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  bool all_finite() const;
};

/// Rows of point, value, terms_used, verdict.
Table cmd_eval(const RunSpec& spec);

struct Table1Row {
  double point;
  double exact;
  double gl_9;
  double series_3;
};

struct Table1 {
  std::vector<Table1Row> rows;
  /// GL side with the smaller worst-case error against the exact column.
  Side gl_side = Side::left;
};

/// D^(1/3) x^2 at 0.2, 0.4, ..., 1.8: closed form, shifted GL with N = 9 and
/// the derivative series with 3 terms.
Table1 compute_table1();

/// Columns point, exact, gl_9, series_3, gl_abs_err, series_abs_err.
Table cmd_table1(const RunSpec& spec);

/// Rows of point, method, value, ref_value, rel_err sorted by point then
/// method name. The reference is rl_quad where the order allows it,
/// otherwise the series with four times the terms.
Table cmd_compare(const RunSpec& spec);

/// Rows of point, residual.
Table cmd_residual(const RunSpec& spec);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

/// Full command line entry point (args excludes the program name). Returns
/// 0 on success, 1 if any row holds a non-finite value, 2 on usage, parse
/// or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracalc::cli
