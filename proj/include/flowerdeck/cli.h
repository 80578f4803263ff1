// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_CLI_H_
#define FLOWERDECK_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>

namespace fd::cli {

struct RunConfig {
  std::string input;
  // verify, profiles, flower, classify, refine, abstract or matroid-checks.
  std::string command;
  int k = -1;  // -1 when not given
  std::string partition;  // inline JSON or a path
  std::string order;
  int exhaustive_limit = 14;
  bool audit = false;
  std::string dot_path;
  int jobs = 0;  // 0 keeps the default
  std::uint64_t seed = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// Report on `out`, progress lines on `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace fd::cli

#endif  // FLOWERDECK_CLI_H_
