#include "fracalc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracalc/errors.hpp"
#include "fracalc/expr.hpp"
#include "fracalc/specfun.hpp"

namespace fracalc::cli {

namespace {

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') {
    text.remove_prefix(1);
  }
  while (!text.empty() && text.back() == ' ') {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) {
      return parts;
    }
    start = at + 1;
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PointFunction pointwise(const Expr& e) {
  return [e](double x) { return eval(e, x); };
}

bool rl_quad_available(double alpha, bool integral) {
  if (!(alpha > 0.0)) {
    return false;
  }
  return integral || alpha != std::round(alpha);
}

struct Evaluation {
  double value;
  long long terms_used;
  std::string verdict;
};

EvalConfig make_config(const RunSpec& spec, int terms) {
  EvalConfig cfg;
  cfg.order = FracOrder::from(spec.alpha);
  cfg.max_terms = terms;
  cfg.gl.iterations = spec.gl_n;
  cfg.gl.use_shift = spec.shift;
  return cfg;
}

Evaluation evaluate(const Expr& e, Method method, double x, const RunSpec& spec, int terms) {
  const EvalConfig cfg = make_config(spec, terms);
  switch (method) {
    case Method::series: {
      const DerivativeProvider p = jet_provider(e);
      const SeriesReport r = spec.integral ? series_integral(p, spec.alpha, x, cfg)
                                           : series_derivative(p, spec.alpha, x, cfg);
      return {r.value, r.terms_used, std::string(to_string(r.verdict))};
    }
    case Method::gl: {
      const double order = spec.integral ? -spec.alpha : spec.alpha;
      return {gl_fractional(pointwise(e), order, x, spec.gl_n, Side::left, spec.shift), spec.gl_n, "n/a"};
    }
    case Method::rl_quad: {
      const double v = spec.integral ? rl_integral_quad(pointwise(e), spec.alpha, x, cfg.quad_points)
                                     : rl_derivative_quad(pointwise(e), spec.alpha, x, cfg.quad_points);
      return {v, cfg.quad_points, "n/a"};
    }
  }
  throw std::logic_error("unhandled method");
}

void check_spec_common(const RunSpec& spec) {
  FracOrder::from(spec.alpha);
  if (spec.points.empty()) {
    throw std::invalid_argument("no points given");
  }
  for (double p : spec.points) {
    if (!(p > 0.0)) {
      throw std::invalid_argument("points must be > 0");
    }
  }
  if (spec.terms < 1) {
    throw std::invalid_argument("terms must be >= 1");
  }
  if (spec.gl_n < 1) {
    throw std::invalid_argument("gl-n must be >= 1");
  }
  if (spec.integral && !(spec.alpha > 0.0)) {
    throw std::invalid_argument("--integral requires alpha > 0");
  }
}

void check_rl_quad(const RunSpec& spec) {
  if (!rl_quad_available(spec.alpha, spec.integral)) {
    throw std::invalid_argument(spec.integral ? "rl_quad requires alpha > 0"
                                              : "rl_quad requires a positive non-integer alpha");
  }
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> points;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("grid must be start:stop:step");
    }
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0) || !(stop >= start)) {
      throw std::invalid_argument("grid needs step > 0 and stop >= start");
    }
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 0.5));
    if (count > 10'000'000) {
      throw std::invalid_argument("grid too large");
    }
    for (long long i = 0; i <= count; ++i) {
      points.push_back(start + static_cast<double>(i) * step);
    }
  } else {
    for (auto part : split(text, ',')) {
      points.push_back(parse_double(part));
    }
  }
  if (points.empty()) {
    throw std::invalid_argument("grid is empty");
  }
  for (double p : points) {
    if (!(p > 0.0)) {
      throw std::invalid_argument("points must be > 0");
    }
  }
  return points;
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::series: return "series";
    case Method::gl: return "gl";
    case Method::rl_quad: return "rl_quad";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "series") {
    return Method::series;
  }
  if (name == "gl") {
    return Method::gl;
  }
  if (name == "rl_quad") {
    return Method::rl_quad;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

bool Table::all_finite() const {
  for (const auto& row : rows) {
    for (const auto& cell : row) {
      if (const double* v = std::get_if<double>(&cell); v && !std::isfinite(*v)) {
        return false;
      }
    }
  }
  return true;
}

Table cmd_eval(const RunSpec& spec) {
  check_spec_common(spec);
  if (spec.methods.size() != 1) {
    throw std::invalid_argument("eval takes exactly one method");
  }
  const Method method = spec.methods.front();
  if (method == Method::rl_quad) {
    check_rl_quad(spec);
  }
  const Expr e = parse(spec.expr_text);
  Table table{{"point", "value", "terms_used", "verdict"}, {}};
  for (double x : spec.points) {
    Evaluation ev = evaluate(e, method, x, spec, spec.terms);
    table.rows.push_back({x, ev.value, ev.terms_used, std::move(ev.verdict)});
  }
  return table;
}

Table1 compute_table1() {
  constexpr double alpha = 1.0 / 3.0;
  constexpr int gl_iterations = 9;
  const Expr square = Expr::power(Expr::variable(), 2.0);
  const DerivativeProvider p = jet_provider(square);
  const PointFunction f = [](double t) { return t * t; };
  EvalConfig cfg;
  cfg.max_terms = 3;

  Table1 out;
  double worst_left = 0.0;
  double worst_right = 0.0;
  std::vector<double> left;
  std::vector<double> right;
  for (int i = 1; i <= 9; ++i) {
    const double x = i / 5.0;
    Table1Row row{};
    row.point = x;
    row.exact = rl_power_rule(2.0, alpha, x);
    row.series_3 = series_derivative(p, alpha, x, cfg).value;
    left.push_back(gl_fractional(f, alpha, x, gl_iterations, Side::left, true));
    right.push_back(gl_fractional(f, alpha, x, gl_iterations, Side::right, true));
    worst_left = std::max(worst_left, std::abs(left.back() - row.exact));
    worst_right = std::max(worst_right, std::abs(right.back() - row.exact));
    out.rows.push_back(row);
  }
  out.gl_side = worst_left <= worst_right ? Side::left : Side::right;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    out.rows[i].gl_9 = out.gl_side == Side::left ? left[i] : right[i];
  }
  return out;
}

Table cmd_table1(const RunSpec&) {
  const Table1 t = compute_table1();
  Table table{{"point", "exact", "gl_9", "series_3", "gl_abs_err", "series_abs_err"}, {}};
  for (const auto& r : t.rows) {
    table.rows.push_back(
        {r.point, r.exact, r.gl_9, r.series_3, std::abs(r.gl_9 - r.exact), std::abs(r.series_3 - r.exact)});
  }
  return table;
}

Table cmd_compare(const RunSpec& spec) {
  check_spec_common(spec);
  std::vector<Method> methods = spec.methods;
  std::sort(methods.begin(), methods.end(), [](Method a, Method b) { return to_string(a) < to_string(b); });
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
  if (methods.size() < 2) {
    throw std::invalid_argument("compare needs at least two distinct methods");
  }
  if (std::find(methods.begin(), methods.end(), Method::rl_quad) != methods.end()) {
    check_rl_quad(spec);
  }
  const bool quad_reference = rl_quad_available(spec.alpha, spec.integral);
  const Expr e = parse(spec.expr_text);

  Table table{{"point", "method", "value", "ref_value", "rel_err"}, {}};
  for (double x : spec.points) {
    const double ref = quad_reference ? evaluate(e, Method::rl_quad, x, spec, spec.terms).value
                                      : evaluate(e, Method::series, x, spec, 4 * spec.terms).value;
    for (Method m : methods) {
      const double v = evaluate(e, m, x, spec, spec.terms).value;
      const double err = ref != 0.0 ? std::abs(v - ref) / std::abs(ref) : std::abs(v - ref);
      table.rows.push_back({x, std::string(to_string(m)), v, ref, err});
    }
  }
  return table;
}

Table cmd_residual(const RunSpec& spec) {
  check_spec_common(spec);
  if (spec.k < 0) {
    throw std::invalid_argument("k must be >= 0");
  }
  const Expr u = parse(spec.expr_u);
  const Expr g = parse(spec.expr_g);
  const DerivativeProvider pu = jet_provider(u);
  const EvalConfig cfg = make_config(spec, spec.terms);
  Table table{{"point", "residual"}, {}};
  for (double x : spec.points) {
    table.rows.push_back({x, ode_residual(pu, spec.alpha, spec.b, spec.k, pointwise(g), x, cfg)});
  }
  return table;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        out << ',';
      }
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_double(v);
            } else {
              out << v;
            }
          },
          row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
    }
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional integrals and derivatives by derivative series, GL and RL quadrature", "fracalc"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string points_text;
  std::string method_text = "series";
  std::vector<std::string> methods_text;
  std::string format_text = "csv";

  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", spec.alpha, "Operator order")->required();
    sub->add_option("--points", points_text, "start:stop:step, a,b,c or a single point")->required();
    sub->add_option("--terms", spec.terms, "Series truncation cap")->capture_default_str();
    sub->add_option("--gl-n", spec.gl_n, "Grunwald-Letnikov grid size")->capture_default_str();
    sub->add_flag("--shift,!--no-shift", spec.shift, "Shift the GL grid by alpha*h/2")->capture_default_str();
    sub->add_flag("--integral", spec.integral, "Apply the fractional integral I^alpha");
    sub->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one operator over a point grid");
  eval_cmd->add_option("--expr", spec.expr_text, "Operand f(x)")->required();
  eval_cmd->add_option("--method", method_text, "series, gl or rl_quad")->capture_default_str();
  add_common(eval_cmd);

  CLI::App* table_cmd = app.add_subcommand("table1", "D^(1/3) x^2 accuracy table");
  table_cmd->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare methods against a reference");
  compare_cmd->add_option("--expr", spec.expr_text, "Operand f(x)")->required();
  compare_cmd->add_option("--methods", methods_text, "Comma-separated methods")->delimiter(',')->required();
  add_common(compare_cmd);

  CLI::App* residual_cmd = app.add_subcommand("residual", "Residual of D^a u + b x^(k-a) u^(k) = g");
  residual_cmd->add_option("--expr-u", spec.expr_u, "Candidate solution u(x)")->required();
  residual_cmd->add_option("--expr-g", spec.expr_g, "Right-hand side g(x)")->required();
  residual_cmd->add_option("--b", spec.b, "Coefficient b")->capture_default_str();
  residual_cmd->add_option("--k", spec.k, "Integer derivative order k")->capture_default_str();
  add_common(residual_cmd);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("fracalc");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) {
    argv.push_back(a.data());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Table table;
  try {
    spec.format = formats.at(format_text);
    if (*table_cmd) {
      spec.command = Command::table1;
      table = cmd_table1(spec);
    } else {
      spec.points = parse_grid(points_text);
      if (*eval_cmd) {
        spec.command = Command::eval;
        spec.methods = {parse_method(method_text)};
        table = cmd_eval(spec);
      } else if (*compare_cmd) {
        spec.command = Command::compare;
        spec.methods.clear();
        for (const auto& m : methods_text) {
          spec.methods.push_back(parse_method(m));
        }
        table = cmd_compare(spec);
      } else {
        spec.command = Command::residual;
        table = cmd_residual(spec);
      }
    }
  } catch (const std::exception& e) {
    err << "fracalc: " << e.what() << '\n';
    return 2;
  }

  if (spec.format == OutputFormat::json) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
  return table.all_finite() ? 0 : 1;
}

}  // namespace fracalc::cli
