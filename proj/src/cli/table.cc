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

#include "cli/table.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace teleamp::cli {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw std::invalid_argument("unknown format: " + name);
}

std::string to_string(Format f) { return f == Format::kCsv ? "csv" : "json"; }

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  j["output"] = output_path.empty() ? "-" : output_path;
  j["format"] = to_string(format);
  return j;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      // Round-trip through the 12-digit text form so JSON and CSV agree.
      return std::strtod(format_number(v).c_str(), nullptr);
    }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

std::string cell_csv(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

TableWriter::TableWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

void TableWriter::manifest(const RunManifest& manifest) {
  out_ << "# " << manifest.to_json().dump() << '\n';
}

void TableWriter::begin_table(const std::string& name, std::vector<std::string> columns) {
  table_ = name;
  columns_ = std::move(columns);
  if (format_ == Format::kCsv) {
    if (tables_written_ > 0) out_ << '\n';
    out_ << "# table: " << name << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      out_ << (i ? "," : "") << columns_[i];
    }
    out_ << '\n';
  } else {
    nlohmann::ordered_json header;
    header["table"] = name;
    header["columns"] = columns_;
    out_ << header.dump() << '\n';
  }
  ++tables_written_;
}

void TableWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_.size()) {
    throw std::logic_error("row width does not match table " + table_);
  }
  if (format_ == Format::kCsv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out_ << (i ? "," : "") << cell_csv(cells[i]);
    }
    out_ << '\n';
  } else {
    nlohmann::ordered_json j;
    j["table"] = table_;
    for (std::size_t i = 0; i < cells.size(); ++i) j[columns_[i]] = cell_json(cells[i]);
    out_ << j.dump() << '\n';
  }
}

}  // namespace teleamp::cli
