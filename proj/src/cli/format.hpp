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

#pragma once

// Tabular results and their CSV / JSON serialisation.

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace dirac_trap::cli {

/// Empty cells (monostate) mark undefined values such as a phase whose
/// moduli fell below the floor.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string, std::complex<double>>;

enum class ColumnKind { real, integer, text, complex };

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::real;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };

Format parse_format(const std::string& text);
std::string extension(Format f);

/// Shortest decimal that parses back to the same double.
std::string format_number(double x);

/// Header row, ',' delimiter, '\n' line endings. A complex column expands to
/// <name>_re,<name>_im; undefined cells are empty fields.
void write_csv(std::ostream& os, const Table& table);

/// Array of objects keyed by column name; complex values as [re, im],
/// undefined values as null.
void write_json(std::ostream& os, const Table& table);

void write_table(std::ostream& os, const Table& table, Format format);

}  // namespace dirac_trap::cli
