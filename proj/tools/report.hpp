#pragma once

#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "xxz/anisotropy.hpp"

namespace xxzcli {

using xxz::cplx;

// empty cell (monostate) renders as "" in CSV and null in JSON
using Cell = std::variant<std::monostate, double, long long, bool, std::string, cplx>;

struct Column {
  std::string name;
  bool complex = false;
};

class Table {
 public:
  Table& col(std::string name, bool complex = false) {
    cols_.push_back({std::move(name), complex});
    return *this;
  }
  Table& row(std::vector<Cell> cells);

  const std::vector<Column>& columns() const { return cols_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

 private:
  std::vector<Column> cols_;
  std::vector<std::vector<Cell>> rows_;
};

struct Report {
  std::string kind;
  Table table;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

nlohmann::ordered_json cjson(cplx z);

/// Renders with the schema version and config echo; "-" writes to stdout.
void emit(const Report& r, const nlohmann::ordered_json& config, const std::string& format,
          const std::string& output);

}  // namespace xxzcli
