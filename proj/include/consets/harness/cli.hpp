// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace consets::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

/// Command-line front end. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace consets::harness
