// Copyright 2026 The dirac-trap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <json.hpp>

#include "dirac_trap/error.hpp"

namespace dirac_trap::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw Error(ErrorCode::invalid_params, "row width does not match the column schema");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw Error(ErrorCode::invalid_params, "format must be csv or json");
}

std::string extension(Format f) { return f == Format::csv ? ".csv" : ".json"; }

std::string format_number(double x) {
  if (x == 0.0) return "0";  // folds -0
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

namespace {

struct CsvField {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(double x) const { return format_number(x); }
  std::string operator()(std::int64_t x) const { return std::to_string(x); }
  std::string operator()(const std::string& s) const { return s; }
  std::string operator()(const std::complex<double>& z) const {
    return format_number(z.real()) + "," + format_number(z.imag());
  }
};

nlohmann::ordered_json to_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const { return x == 0.0 ? 0.0 : x; }
    nlohmann::ordered_json operator()(std::int64_t x) const { return x; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(const std::complex<double>& z) const {
      return nlohmann::ordered_json::array({z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()});
    }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) os << ',';
    const Column& col = table.columns[c];
    if (col.kind == ColumnKind::complex)
      os << col.name << "_re," << col.name << "_im";
    else
      os << col.name;
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ',';
      if (table.columns[c].kind == ColumnKind::complex && std::holds_alternative<std::monostate>(row[c]))
        os << ',';
      else
        os << std::visit(CsvField{}, row[c]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c].name] = to_json(row[c]);
    out.push_back(std::move(obj));
  }
  os << out.dump(1) << '\n';
}

void write_table(std::ostream& os, const Table& table, Format format) {
  if (format == Format::csv)
    write_csv(os, table);
  else
    write_json(os, table);
}

}  // namespace dirac_trap::cli
