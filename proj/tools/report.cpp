#include "report.hpp"

#include <cmath>
#include <iostream>

#include "xxz/errors.hpp"
#include "xxz/io.hpp"

namespace xxzcli {

namespace {

// nlohmann writes non-finite doubles as null; keep them visible
nlohmann::ordered_json real_json(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) return real_json(v);
        else if constexpr (std::is_same_v<T, cplx>) return cjson(v);
        else return v;
      },
      c);
}

void cell_csv(const Cell& c, bool complex, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          out.emplace_back();
          if (complex) out.emplace_back();
        } else if constexpr (std::is_same_v<T, cplx>) {
          xxz::push_complex(out, v);
        } else if constexpr (std::is_same_v<T, double>) {
          out.push_back(xxz::format_real(v));
        } else if constexpr (std::is_same_v<T, bool>) {
          out.emplace_back(v ? "true" : "false");
        } else if constexpr (std::is_same_v<T, long long>) {
          out.push_back(std::to_string(v));
        } else {
          out.push_back(v);
        }
      },
      c);
}

}  // namespace

Table& Table::row(std::vector<Cell> cells) {
  if (cells.size() != cols_.size()) throw std::logic_error("Table::row: cell count mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool is_c = std::holds_alternative<cplx>(cells[i]);
    if (is_c && !cols_[i].complex) throw std::logic_error("Table::row: complex value in real column " + cols_[i].name);
  }
  rows_.push_back(std::move(cells));
  return *this;
}

nlohmann::ordered_json cjson(cplx z) {
  nlohmann::ordered_json j;
  j["re"] = real_json(z.real());
  j["im"] = real_json(z.imag());
  return j;
}

void emit(const Report& r, const nlohmann::ordered_json& config, const std::string& format,
          const std::string& output) {
  std::string text;
  if (format == "csv") {
    std::vector<std::string> names;
    for (const auto& c : r.table.columns()) {
      if (c.complex) {
        for (auto& s : xxz::CsvTable::complex_columns(c.name)) names.push_back(s);
      } else {
        names.push_back(c.name);
      }
    }
    xxz::CsvTable csv(names);
    for (const auto& row : r.table.rows()) {
      std::vector<std::string> cells;
      for (std::size_t i = 0; i < row.size(); ++i) cell_csv(row[i], r.table.columns()[i].complex, cells);
      csv.add_row(std::move(cells));
    }
    text = csv.render(r.kind, config.dump());
  } else if (format == "json") {
    nlohmann::ordered_json doc;
    doc["schema_version"] = xxz::kSchemaVersion;
    doc["kind"] = r.kind;
    doc["config"] = config;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.table.rows()) {
      nlohmann::ordered_json o;
      for (std::size_t i = 0; i < row.size(); ++i) o[r.table.columns()[i].name] = cell_json(row[i]);
      rows.push_back(std::move(o));
    }
    if (!r.extra.empty()) doc["extra"] = r.extra;
    text = doc.dump(2) + "\n";
  } else {
    throw xxz::InvalidArgument("unknown format '" + format + "'");
  }

  if (output.empty() || output == "-") {
    std::cout << text << std::flush;
  } else {
    xxz::write_text_file(output, text);
  }
}

}  // namespace xxzcli
