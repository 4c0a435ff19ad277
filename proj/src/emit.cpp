// emit.cpp - CSV/JSON writers
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "diamag/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace diamag {

namespace {

NamedCells sorted_by_name(NamedCells cells) {
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return cells;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_to_csv(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Number:
      return format_number(c.num);
    case Cell::Kind::Integer:
      return std::to_string(c.integer);
    case Cell::Kind::Text:
      return csv_escape(c.text);
    case Cell::Kind::Empty:
      return "";
  }
  return "";
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string cell_to_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Number:
      return format_number(c.num);
    case Cell::Kind::Integer:
      return std::to_string(c.integer);
    case Cell::Kind::Text:
      return json_escape(c.text);
    case Cell::Kind::Empty:
      return "null";
  }
  return "null";
}

void check_schema(const SweepResult& result) {
  if (result.rows.empty()) {
    throw std::logic_error("emit: empty sweeps are forbidden upstream");
  }
  const SweepRow& first = result.rows.front();
  for (const SweepRow& row : result.rows) {
    const bool same = row.inputs.size() == first.inputs.size() &&
                      row.outputs.size() == first.outputs.size() &&
                      row.diagnostics.size() == first.diagnostics.size();
    if (!same) {
      throw std::logic_error("emit: rows disagree on the column schema");
    }
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void emit_csv(const SweepResult& result, std::ostream& os) {
  check_schema(result);
  for (const auto& [key, value] : result.metadata) {
    os << "# " << key << ": " << value << "\n";
  }
  const SweepRow& first = result.rows.front();
  bool lead = true;
  auto emit_names = [&](const NamedCells& cells) {
    for (const auto& [name, cell] : cells) {
      (void)cell;
      if (!lead) os << ",";
      os << csv_escape(name);
      lead = false;
    }
  };
  emit_names(first.inputs);
  emit_names(sorted_by_name(first.outputs));
  emit_names(sorted_by_name(first.diagnostics));
  if (!lead) os << ",";
  os << "flags\n";
  for (const SweepRow& row : result.rows) {
    bool first_cell = true;
    auto emit_cells = [&](const NamedCells& cells) {
      for (const auto& [name, cell] : cells) {
        (void)name;
        if (!first_cell) os << ",";
        os << cell_to_csv(cell);
        first_cell = false;
      }
    };
    emit_cells(row.inputs);
    emit_cells(sorted_by_name(row.outputs));
    emit_cells(sorted_by_name(row.diagnostics));
    if (!first_cell) os << ",";
    os << csv_escape(row.flags) << "\n";
  }
}

void emit_json(const SweepResult& result, std::ostream& os) {
  check_schema(result);
  os << "{\n  \"metadata\": {";
  bool first = true;
  for (const auto& [key, value] : result.metadata) {
    os << (first ? "\n" : ",\n") << "    " << json_escape(key) << ": "
       << json_escape(value);
    first = false;
  }
  os << "\n  },\n  \"rows\": [";
  bool first_row = true;
  for (const SweepRow& row : result.rows) {
    os << (first_row ? "\n" : ",\n") << "    {";
    first_row = false;
    bool first_cell = true;
    auto emit_cells = [&](const NamedCells& cells) {
      for (const auto& [name, cell] : cells) {
        os << (first_cell ? "" : ", ") << json_escape(name) << ": "
           << cell_to_json(cell);
        first_cell = false;
      }
    };
    emit_cells(row.inputs);
    emit_cells(sorted_by_name(row.outputs));
    emit_cells(sorted_by_name(row.diagnostics));
    os << (first_cell ? "" : ", ") << "\"flags\": " << json_escape(row.flags);
    os << "}";
  }
  os << "\n  ]\n}\n";
}

}  // namespace diamag
