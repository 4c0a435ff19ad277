// emit.hpp - deterministic CSV/JSON serialization of sweep results
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace diamag {

struct Cell {
  enum class Kind { Number, Integer, Text, Empty };
  Kind kind = Kind::Empty;
  double num = 0.0;
  long integer = 0;
  std::string text;

  static Cell number(double v) { return Cell{Kind::Number, v, 0, {}}; }
  static Cell whole(long v) { return Cell{Kind::Integer, 0.0, v, {}}; }
  static Cell str(std::string v) {
    return Cell{Kind::Text, 0.0, 0, std::move(v)};
  }
  static Cell empty() { return Cell{}; }
};

using NamedCells = std::vector<std::pair<std::string, Cell>>;

struct SweepRow {
  NamedCells inputs;       // emitted in insertion order
  NamedCells outputs;      // emitted alphabetically
  NamedCells diagnostics;  // emitted alphabetically, after outputs
  std::string flags;       // semicolon-joined markers; empty normally
};

struct SweepResult {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<SweepRow> rows;
  long error_rows = 0;  // rows whose flags carry an error marker
};

/// Scientific notation with 17 significant digits ("%.16e"): exact binary64
/// round trips, so golden files are byte-stable.
std::string format_number(double v);

/// CSV: UTF-8, comma separated, LF endings, mandatory header
/// (inputs, outputs alphabetically, diagnostics, flags).
void emit_csv(const SweepResult& result, std::ostream& os);

/// JSON: two top-level keys "metadata" and "rows", keys in the same order as
/// the CSV columns, numbers rendered like the CSV.
void emit_json(const SweepResult& result, std::ostream& os);

}  // namespace diamag
