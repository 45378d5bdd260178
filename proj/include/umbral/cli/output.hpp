#pragma once

// Tabular output in csv, json and markdown.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace umbral::cli {

enum class OutputFormat { csv, json, markdown };

[[nodiscard]] std::optional<OutputFormat> parse_format(std::string_view name) noexcept;

/// Rendering of a floating cell in csv and markdown. JSON always carries the
/// full double.
enum class NumberStyle { general, fixed, scientific, rel_error };

struct Cell {
  std::variant<std::monostate, std::string, long long, double, bool> value;
  NumberStyle style = NumberStyle::general;
  int digits = 10;

  Cell() = default;
  Cell(std::string s) : value(std::move(s)) {}
  Cell(const char* s) : value(std::string(s)) {}
  Cell(long long v) : value(v) {}
  Cell(int v) : value(static_cast<long long>(v)) {}
  Cell(bool v) : value(v) {}
  Cell(double v, NumberStyle st = NumberStyle::general, int d = 10) : value(v), style(st), digits(d) {}
};

struct Document {
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;
};

/// Two significant digits, truncated: 0.0876 -> "8.7e-2".
[[nodiscard]] std::string format_rel_error(double v);

/// Text form of one cell; `full` prints doubles with 17 significant digits.
[[nodiscard]] std::string render(const Cell& cell, bool full);

void write_document(const Document& doc, OutputFormat format, bool full, std::ostream& out);

}  // namespace umbral::cli
