// version.hpp
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

namespace diamag {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace diamag
