// Copyright 2026 The Teleamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TELEAMP_CLI_TABLE_H_
#define TELEAMP_CLI_TABLE_H_

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace teleamp::cli {

enum class Format { kCsv, kJson };

Format parse_format(const std::string& name);
std::string to_string(Format f);

/// Echoed as the first line of every output stream.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::optional<unsigned long long> seed;
  std::string output_path;  // empty for stdout
  Format format = Format::kCsv;

  nlohmann::ordered_json to_json() const;
};

/// Empty cell, integer, real or text.
using Cell = std::variant<std::monostate, long long, double, std::string>;

/// 12 significant digits, "%.12g".
std::string format_number(double value);

/// Writes named tables as CSV (header row, then rows) or JSON lines (one
/// object per row keyed by column name, preceded by a column-list object).
class TableWriter {
 public:
  TableWriter(std::ostream& out, Format format);

  void manifest(const RunManifest& manifest);
  void begin_table(const std::string& name, std::vector<std::string> columns);
  void row(const std::vector<Cell>& cells);

 private:
  std::ostream& out_;
  Format format_;
  std::string table_;
  std::vector<std::string> columns_;
  int tables_written_ = 0;
};

}  // namespace teleamp::cli

#endif  // TELEAMP_CLI_TABLE_H_
