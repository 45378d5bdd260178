#include "umbral/cli/output.hpp"

#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

namespace umbral::cli {

std::optional<OutputFormat> parse_format(std::string_view name) noexcept {
  if (name == "csv") {
    return OutputFormat::csv;
  }
  if (name == "json") {
    return OutputFormat::json;
  }
  if (name == "markdown" || name == "md") {
    return OutputFormat::markdown;
  }
  return std::nullopt;
}

std::string format_rel_error(double v) {
  if (v == 0.0) {
    return "0";
  }
  if (!std::isfinite(v)) {
    return std::isnan(v) ? "nan" : "inf";
  }
  const double mag = std::abs(v);
  int e = static_cast<int>(std::floor(std::log10(mag)));
  auto m = static_cast<long long>(std::floor(mag / std::pow(10.0, e - 1) * (1.0 + 1e-12)));
  if (m >= 100) {
    m /= 10;
    ++e;
  }
  return fmt::format("{}{}.{}e{}", v < 0 ? "-" : "", m / 10, m % 10, e);
}

namespace {

std::string render_double(double v, NumberStyle style, int digits, bool full) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  if (full) {
    return fmt::format("{:.17g}", v);
  }
  switch (style) {
    case NumberStyle::general:
      return fmt::format("{:.{}g}", v, digits);
    case NumberStyle::fixed:
      return fmt::format("{:.{}f}", v, digits);
    case NumberStyle::scientific:
      return fmt::format("{:.{}e}", v, digits);
    case NumberStyle::rel_error:
      return format_rel_error(v);
  }
  return fmt::format("{}", v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') {
      q += '"';
    }
    q += c;
  }
  return q + "\"";
}

nlohmann::ordered_json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) {
            return nullptr;
          }
          return v;
        } else {
          return v;
        }
      },
      cell.value);
}

void write_csv(const Document& doc, bool full, std::ostream& out) {
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(doc.columns[i]);
  }
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(render(row[i], full));
    }
    out << '\n';
  }
}

void write_json(const Document& doc, std::ostream& out) {
  nlohmann::ordered_json j;
  if (!doc.meta.empty()) {
    auto& meta = j["meta"];
    meta = nlohmann::ordered_json::object();
    for (const auto& [key, cell] : doc.meta) {
      meta[key] = to_json(cell);
    }
  }
  auto& rows = j["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) {
      r[doc.columns[i]] = to_json(row[i]);
    }
    rows.push_back(std::move(r));
  }
  if (!doc.notes.empty()) {
    j["notes"] = doc.notes;
  }
  out << j.dump(2) << '\n';
}

std::string md_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '|') {
      r += '\\';
    }
    r += c;
  }
  return r;
}

void write_markdown(const Document& doc, bool full, std::ostream& out) {
  for (const auto& [key, cell] : doc.meta) {
    out << "**" << key << "**: " << render(cell, full) << "  \n";
  }
  if (!doc.meta.empty()) {
    out << '\n';
  }
  out << '|';
  for (const auto& c : doc.columns) {
    out << ' ' << md_escape(c) << " |";
  }
  out << "\n|";
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    out << "---|";
  }
  out << '\n';
  for (const auto& row : doc.rows) {
    out << '|';
    for (const auto& cell : row) {
      out << ' ' << md_escape(render(cell, full)) << " |";
    }
    out << '\n';
  }
  if (!doc.notes.empty()) {
    out << '\n';
    for (const auto& n : doc.notes) {
      out << "> " << n << "\n";
    }
  }
}

}  // namespace

std::string render(const Cell& cell, bool full) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long long>) {
          return fmt::format("{}", v);
        } else {
          return render_double(v, cell.style, cell.digits, full);
        }
      },
      cell.value);
}

void write_document(const Document& doc, OutputFormat format, bool full, std::ostream& out) {
  switch (format) {
    case OutputFormat::csv:
      write_csv(doc, full, out);
      return;
    case OutputFormat::json:
      write_json(doc, out);
      return;
    case OutputFormat::markdown:
      write_markdown(doc, full, out);
      return;
  }
}

}  // namespace umbral::cli
