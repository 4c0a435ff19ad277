// ledger.hpp - recorded discrepancies between the published closed forms and
// the numerical oracles
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>
#include <vector>

namespace diamag {

/// One inconsistency found while cross-validating the implemented closed
/// forms. `stated` is the value or claim as published; `computed` is what the
/// independent oracle yields; `resolution` says which one the library uses.
struct LedgerEntry {
  std::string id;
  std::string module;
  std::string stated;
  std::string computed;
  std::string resolution;
};

const std::vector<LedgerEntry>& discrepancy_ledger();

/// Human-readable report, one block per entry.
std::string format_ledger();

}  // namespace diamag
