#include "umbral/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "umbral/asymptotics.hpp"
#include "umbral/bessel.hpp"
#include "umbral/cli/output.hpp"
#include "umbral/cli/table_spec.hpp"
#include "umbral/errors.hpp"
#include "umbral/oracle.hpp"
#include "umbral/polynomials.hpp"

namespace umbral::cli {

namespace {

constexpr const char* kFooter =
    "Numbers may be decimals (0.1) or exact fractions and integers (1/3, 7).\n"
    "When every polynomial argument is exact the value comes from the rational\n"
    "oracle; decimal inputs go through the float evaluators.\n"
    "Exit codes: 0 success, 1 table mismatch, 2 usage or parse error,\n"
    "3 domain or numeric error.";

struct Globals {
  std::string format = "markdown";
  bool full = false;
  double tol = 1e-15;
  int max_terms = 200;
  std::string out;
  std::string table_dir;

  [[nodiscard]] SeriesControl control() const {
    SeriesControl c;
    c.rel_tol = tol;
    c.max_terms = max_terms;
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(fmt::format("--tol / --max-terms: {}", e.what()));
    }
    return c;
  }
};

struct EvalArgs {
  std::string function;
  std::optional<int> n;
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::optional<std::string> alpha;
  std::optional<std::string> xs;
  std::optional<std::string> t;
};

struct ApproxArgs {
  std::string family;
  int n = 0;
  std::string x;
  std::string y;
  int m = 1;
  std::optional<std::string> alpha;
  bool closed = false;
  bool j2 = false;
};

struct SweepArgs {
  std::string family;
  std::string n_range;
  std::string m_range = "1";
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::optional<std::string> nx;
  std::optional<std::string> n2y;
  std::optional<std::string> alpha;
  bool closed = false;
  bool j2 = false;
};

template <class T>
const T& need(const std::optional<T>& v, const std::string& what, const std::string& function) {
  if (!v) {
    throw ParseError(fmt::format("{} needs {}", function, what));
  }
  return *v;
}

std::vector<Number> parse_list(const std::string& text) {
  std::vector<Number> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_number(item));
  }
  if (out.empty()) {
    throw ParseError("empty argument list");
  }
  return out;
}

int parse_int(const std::string& text) {
  int v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError(fmt::format("cannot parse '{}' as an integer", text));
  }
  return v;
}

/// "a..b", "a..b:+k", "a..b:xk" or a comma list. Result is ascending and unique.
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> values;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      values.push_back(parse_int(item));
    }
  } else {
    const int lo = parse_int(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    std::string step = "+1";
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      step = rest.substr(colon + 1);
      rest = rest.substr(0, colon);
    }
    const int hi = parse_int(rest);
    if (step.empty()) {
      throw ParseError(fmt::format("range '{}' has an empty step", text));
    }
    if (step.front() == 'x' || step.front() == '*') {
      const int factor = parse_int(step.substr(1));
      if (factor < 2 || lo < 1) {
        throw ParseError(fmt::format("geometric range '{}' needs factor >= 2 and start >= 1", text));
      }
      for (long long v = lo; v <= hi; v *= factor) {
        values.push_back(static_cast<int>(v));
      }
    } else {
      const int inc = parse_int(step.front() == '+' ? step.substr(1) : step);
      if (inc < 1) {
        throw ParseError(fmt::format("range '{}' needs a positive step", text));
      }
      for (long long v = lo; v <= hi; v += inc) {
        values.push_back(static_cast<int>(v));
      }
    }
  }
  if (values.empty()) {
    throw ParseError(fmt::format("range '{}' is empty", text));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

PolyFamily family_from(const std::string& name, int n, const std::optional<std::string>& alpha) {
  const auto tag = parse_family(name);
  if (!tag) {
    throw ParseError(fmt::format("unknown family '{}' (hermite2, laguerre2, assoclaguerre, hybrid)", name));
  }
  PolyFamily f{*tag, n, 0.0, 1};
  if (alpha) {
    if (*tag != FamilyTag::assoc_laguerre) {
      throw ParseError("--alpha applies to assoclaguerre only");
    }
    f.alpha = parse_number(*alpha).value;
  }
  f.validate();
  return f;
}

Formula formula_from(bool closed, bool j2) {
  if (closed) {
    return Formula::hermite_closed;
  }
  if (j2) {
    return Formula::laguerre_j2;
  }
  return Formula::order_m;
}

// ---------------------------------------------------------------------------
// eval

Document cmd_eval(const EvalArgs& a, const Globals& g) {
  const auto ctl = g.control();
  const std::string& fn = a.function;
  std::string args;
  double value = 0.0;
  std::string source = "float";
  std::optional<std::string> fraction;
  std::optional<SeriesValue> series;

  auto poly_point = [&]() {
    const auto x = parse_number(need(a.x, "--x", fn));
    const auto y = parse_number(need(a.y, "--y", fn));
    args = fmt::format("x={} y={}", *a.x, *a.y);
    return std::pair{x, y};
  };
  const int n = (fn == "tricomi" || fn == "hermitebessel" || fn == "evenhermite") ? 0 : need(a.n, "--n", fn);

  if (fn == "laguerre2" || fn == "hermite2" || fn == "hybrid") {
    const auto [x, y] = poly_point();
    if (x.exact && y.exact) {
      Rational r;
      if (fn == "laguerre2") {
        r = exact_laguerre(n, *x.exact, *y.exact);
      } else if (fn == "hermite2") {
        r = exact_hermite(n, *x.exact, *y.exact);
      } else {
        r = exact_hybrid(n, *x.exact, *y.exact);
      }
      value = to_double(r);
      fraction = to_string(r);
      source = "rational";
    } else if (fn == "laguerre2") {
      value = laguerre2(n, x.value, y.value);
    } else if (fn == "hermite2") {
      value = hermite2(n, x.value, y.value);
    } else {
      value = hybrid_hl(n, x.value, y.value);
    }
  } else if (fn == "assoclaguerre") {
    const auto [x, y] = poly_point();
    const double alpha = parse_number(need(a.alpha, "--alpha", fn)).value;
    args = fmt::format("alpha={} {}", *a.alpha, args);
    value = assoc_laguerre(n, alpha, x.value, y.value);
  } else if (fn == "hermitem") {
    const auto xs = parse_list(need(a.xs, "--xs", fn));
    args = fmt::format("xs={}", *a.xs);
    if (std::all_of(xs.begin(), xs.end(), [](const Number& v) { return v.exact.has_value(); })) {
      std::vector<Rational> exact;
      for (const auto& v : xs) {
        exact.push_back(*v.exact);
      }
      const Rational r = hermite_m<Rational>(n, exact);
      value = to_double(r);
      fraction = to_string(r);
      source = "rational";
    } else {
      std::vector<double> d;
      for (const auto& v : xs) {
        d.push_back(v.value);
      }
      value = hermite_m<double>(n, d);
    }
  } else if (fn == "besselj" || fn == "besseli") {
    const double x = parse_number(need(a.x, "--x", fn)).value;
    args = fmt::format("x={}", *a.x);
    series = fn == "besselj" ? bessel_j(n, x, ctl) : bessel_i(n, x, ctl);
  } else if (fn == "tricomi") {
    const double alpha = parse_number(need(a.alpha, "--alpha", fn)).value;
    const double x = parse_number(need(a.x, "--x", fn)).value;
    args = fmt::format("alpha={} x={}", *a.alpha, *a.x);
    series = tricomi(alpha, x, ctl);
  } else if (fn == "hermitebessel") {
    const double nu = parse_number(need(a.alpha, "--alpha (the order nu)", fn)).value;
    std::vector<double> xs;
    for (const auto& v : parse_list(need(a.xs, "--xs", fn))) {
      xs.push_back(v.value);
    }
    args = fmt::format("nu={} xs={}", *a.alpha, *a.xs);
    series = hermite_bessel(nu, xs, ctl);
  } else if (fn == "evenhermite") {
    const double x = parse_number(need(a.x, "--x", fn)).value;
    const double y = parse_number(need(a.y, "--y", fn)).value;
    const double t = parse_number(need(a.t, "--t", fn)).value;
    args = fmt::format("x={} y={} t={}", *a.x, *a.y, *a.t);
    value = even_hermite_gf(x, y, t);
  } else {
    throw ParseError(fmt::format(
        "unknown function '{}' (laguerre2, hermite2, hybrid, assoclaguerre, hermitem, besselj, besseli, tricomi, "
        "hermitebessel, evenhermite)",
        fn));
  }
  if (series) {
    value = series->value;
    source = "series";
  }

  Document doc;
  doc.columns = {"function", "n", "args", "value", "source", "exact_fraction", "terms", "tail_bound"};
  std::vector<Cell> row{fn, n, args, Cell(value), source};
  row.push_back(fraction ? Cell(*fraction) : Cell());
  row.push_back(series ? Cell(series->terms_used) : Cell());
  row.push_back(series ? Cell(series->tail_bound, NumberStyle::general, 3) : Cell());
  doc.rows.push_back(std::move(row));
  return doc;
}

// ---------------------------------------------------------------------------
// approx and sweep

const std::vector<std::string> kReportColumns{"family", "n",        "x",     "y",           "m",
                                              "formula", "approx",  "exact", "rel_error", "terms",
                                              "exact_source"};

std::vector<Cell> report_row(const ApproxReport& r, const std::string& x, const std::string& y) {
  return {std::string(to_string(r.family.tag)),
          r.n,
          x,
          y,
          r.order_m,
          std::string(to_string(r.formula)),
          Cell(r.approx),
          Cell(r.exact),
          Cell(r.relative_error, NumberStyle::rel_error),
          r.terms_used,
          r.exact_from_rational ? "rational" : "float"};
}

Document cmd_approx(const ApproxArgs& a, const Globals& g) {
  const auto family = family_from(a.family, a.n, a.alpha);
  const auto point = parse_point(a.x, a.y);
  const auto rep = make_report(family, point, a.m, g.control(), formula_from(a.closed, a.j2));
  Document doc;
  doc.columns = kReportColumns;
  doc.rows.push_back(report_row(rep, a.x, a.y));
  return doc;
}

std::string number_text(const Number& v) { return v.exact ? to_string(*v.exact) : fmt::format("{}", v.value); }

Document cmd_sweep(const SweepArgs& a, const Globals& g) {
  const auto ns = parse_range(a.n_range);
  auto ms = parse_range(a.m_range);
  const Formula formula = formula_from(a.closed, a.j2);
  if (formula != Formula::order_m) {
    ms = {2};
  }
  if (a.x.has_value() == a.nx.has_value()) {
    throw ParseError("sweep needs exactly one of --x and --nx");
  }
  if (a.y.has_value() == a.n2y.has_value()) {
    throw ParseError("sweep needs exactly one of --y and --n2y");
  }
  const Number xin = parse_number(a.x ? *a.x : *a.nx);
  const Number yin = parse_number(a.y ? *a.y : *a.n2y);
  const auto ctl = g.control();

  Document doc;
  doc.columns = kReportColumns;
  for (int n : ns) {
    if (n < 1) {
      throw DomainError(fmt::format("sweep index n = {} must be >= 1", n));
    }
    Number x = xin;
    Number y = yin;
    if (a.nx) {
      x.value = xin.value / n;
      if (xin.exact) {
        x.exact = *xin.exact / n;
      }
    }
    if (a.n2y) {
      const double n2 = static_cast<double>(n) * n;
      y.value = yin.value / n2;
      if (yin.exact) {
        y.exact = *yin.exact / (static_cast<long long>(n) * n);
      }
    }
    const auto family = family_from(a.family, n, a.alpha);
    const auto point = make_point(x, y);
    for (int m : ms) {
      const auto rep = make_report(family, point, m, ctl, formula);
      doc.rows.push_back(report_row(rep, number_text(x), number_text(y)));
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------
// table

std::string formula_label(const TableRow& row) {
  if (row.kind == TableRow::Kind::exact) {
    return "exact";
  }
  return std::string(to_string(row.formula));
}

int cmd_table(int id, const Globals& g, Document& doc, std::ostream& err) {
  const std::filesystem::path dir = g.table_dir.empty() ? default_table_dir() : std::filesystem::path(g.table_dir);
  const TableSpec spec = load_table(id, dir);
  const TableResult result = evaluate_table(spec, g.control());
  const NumberStyle vstyle =
      spec.format.style == ValueFormat::Style::fixed ? NumberStyle::fixed : NumberStyle::scientific;

  doc.meta.emplace_back("table", id);
  doc.meta.emplace_back("title", spec.title);
  doc.meta.emplace_back("reconstructed", spec.reconstructed);
  doc.columns = {"row",   "family",    "n",        "x",   "y", "m", "formula", "computed", "expected",
                 "rel_error", "expected_rel_error", "status"};
  for (const auto& rr : result.rows) {
    const TableRow& row = *rr.row;
    std::vector<Cell> cells{row.label,
                            std::string(to_string(row.family.tag)),
                            row.family.n,
                            row.x_text,
                            row.y_text,
                            row.kind == TableRow::Kind::exact ? Cell() : Cell(row.m),
                            formula_label(row),
                            Cell(rr.value, vstyle, spec.format.digits)};
    cells.push_back(row.expected_value ? Cell(*row.expected_value, vstyle, spec.format.digits) : Cell());
    cells.push_back(rr.rel_error ? Cell(*rr.rel_error, NumberStyle::rel_error) : Cell());
    cells.push_back(row.expected_rel_error ? Cell(*row.expected_rel_error, NumberStyle::rel_error) : Cell());
    cells.push_back(rr.ok() ? "ok" : "MISMATCH");
    doc.rows.push_back(std::move(cells));
    if (!row.note.empty()) {
      doc.notes.push_back(fmt::format("{}: {}", row.label, row.note));
    }
  }
  for (const auto& n : spec.notes) {
    doc.notes.push_back(n);
  }
  if (result.pattern) {
    const auto& p = *result.pattern;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < p.orders.size(); ++i) {
      parts.push_back(fmt::format("m={}: {}", p.orders[i], format_rel_error(p.errors[i])));
    }
    const std::string text =
        fmt::format("{} ({} decades, need {}): {}", fmt::join(parts, " > "), fmt::format("{:.2f}", p.decades),
                    spec.pattern->min_decades, p.ok ? "ok" : "MISMATCH");
    doc.meta.emplace_back("error_pattern", text);
  }
  doc.meta.emplace_back("verdict", result.passed() ? "PASS" : "FAIL");

  if (result.passed()) {
    return ExitCode::ok;
  }
  for (const auto& rr : result.rows) {
    if (rr.ok()) {
      continue;
    }
    std::string detail = fmt::format("table {}: row '{}' mismatch:", id, rr.row->label);
    if (!rr.value_ok) {
      detail += fmt::format(" value {:.10g}, expected {:.10g}", rr.value, *rr.row->expected_value);
    }
    if (!rr.error_ok) {
      detail += fmt::format(" rel_error {}, expected {}", format_rel_error(*rr.rel_error),
                            format_rel_error(*rr.row->expected_rel_error));
    }
    err << detail << '\n';
  }
  if (result.pattern && !result.pattern->ok) {
    err << fmt::format("table {}: error pattern mismatch\n", id);
  }
  return ExitCode::mismatch;
}

void emit(const Document& doc, const Globals& g, std::ostream& out) {
  const auto format = parse_format(g.format);
  if (!format) {
    throw ParseError(fmt::format("unknown format '{}'", g.format));
  }
  if (g.out.empty()) {
    write_document(doc, *format, g.full, out);
    return;
  }
  std::ofstream file(g.out);
  if (!file) {
    throw ParseError(fmt::format("cannot open output file '{}'", g.out));
  }
  write_document(doc, *format, g.full, file);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and large-index evaluation of Laguerre, Hermite and hybrid polynomials", "umbral"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "markdown"}))
      ->capture_default_str();
  app.add_flag("--full", g.full, "Print doubles with 17 significant digits");
  app.add_option("--tol", g.tol, "Relative stop tolerance of every series")->capture_default_str();
  app.add_option("--max-terms", g.max_terms, "Term budget of every series")->capture_default_str();
  app.add_option("--out", g.out, "Write the output to this file");
  app.add_option("--table-dir", g.table_dir, "Directory holding table1.json .. table5.json");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial or special function");
  eval->add_option("function", ea.function,
                   "laguerre2 | hermite2 | hybrid | assoclaguerre | hermitem | besselj | besseli | tricomi | "
                   "hermitebessel | evenhermite")
      ->required();
  eval->add_option("--n", ea.n, "Degree or Bessel order");
  eval->add_option("--x", ea.x, "First variable");
  eval->add_option("--y", ea.y, "Second variable");
  eval->add_option("--alpha", ea.alpha, "alpha (assoclaguerre, tricomi) or nu (hermitebessel)");
  eval->add_option("--xs", ea.xs, "Comma separated arguments (hermitem, hermitebessel)");
  eval->add_option("--t", ea.t, "Generating-function variable (evenhermite)");

  ApproxArgs aa;
  auto* approx = app.add_subcommand("approx", "Large-index approximation paired with the exact value");
  approx->add_option("family", aa.family, "laguerre2 | assoclaguerre | hermite2 | hybrid")->required();
  approx->add_option("--n", aa.n, "Index")->required();
  approx->add_option("--x", aa.x, "x of the polynomial")->required();
  approx->add_option("--y", aa.y, "y of the polynomial")->required();
  approx->add_option("--m", aa.m, "Expansion order")->capture_default_str();
  approx->add_option("--alpha", aa.alpha, "alpha (assoclaguerre)");
  auto* closed = approx->add_flag("--closed", aa.closed, "Closed Gaussian second-order form (hermite2)");
  approx->add_flag("--j2", aa.j2, "Two-Bessel second-order form (laguerre2)")->excludes(closed);

  int table_id = 0;
  auto* table = app.add_subcommand("table", "Recompute a reference table and compare");
  table->add_option("id", table_id, "Table number 1..5")->required();

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Approximation reports over a grid of n and m");
  sweep->add_option("family", sa.family, "laguerre2 | assoclaguerre | hermite2 | hybrid")->required();
  sweep->add_option("--n", sa.n_range, "Index range: a..b, a..b:+k, a..b:xk or a,b,c")->required();
  sweep->add_option("--m", sa.m_range, "Order range, same syntax")->capture_default_str();
  sweep->add_option("--x", sa.x, "Fixed x");
  sweep->add_option("--y", sa.y, "Fixed y");
  sweep->add_option("--nx", sa.nx, "Fixed x*n (x = nx/n)");
  sweep->add_option("--n2y", sa.n2y, "Fixed y*n^2 (y = n2y/n^2)");
  sweep->add_option("--alpha", sa.alpha, "alpha (assoclaguerre)");
  auto* sclosed = sweep->add_flag("--closed", sa.closed, "Closed Gaussian second-order form (hermite2)");
  sweep->add_flag("--j2", sa.j2, "Two-Bessel second-order form (laguerre2)")->excludes(sclosed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  try {
    Document doc;
    int code = ExitCode::ok;
    if (*eval) {
      doc = cmd_eval(ea, g);
    } else if (*approx) {
      doc = cmd_approx(aa, g);
    } else if (*table) {
      code = cmd_table(table_id, g, doc, err);
    } else {
      doc = cmd_sweep(sa, g);
    }
    emit(doc, g, out);
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const TableSpecError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::domain;
  }
}

}  // namespace umbral::cli
