// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "flowerdeck/cli.h"

int main(int argc, char** argv) {
  fd::cli::RunConfig cfg;
  CLI::App app{"Profiles, flowers and tree structure of finite connectivity systems"};
  app.add_option("command", cfg.command, "Analysis to run")
      ->required()
      ->check(CLI::IsMember({"verify", "profiles", "flower", "classify", "refine", "abstract",
                             "matroid-checks"}));
  app.add_option("input", cfg.input, "connsys-v1 JSON file")->required();
  app.add_option("--k", cfg.k, "Order bound k")->check(CLI::NonNegativeNumber);
  app.add_option("--partition", cfg.partition, "Petals as inline JSON or a file");
  app.add_option("--order", cfg.order, "Cyclic order on petal indices as inline JSON or a file");
  app.add_option("--exhaustive-limit", cfg.exhaustive_limit,
                 "Largest ground set scanned exhaustively")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--audit", cfg.audit, "Check mu against every reference petal");
  app.add_option("--dot", cfg.dot_path, "Write the abstract tree as DOT");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), fd::cli::kExitInputError);
  }
  if (const char* seed = std::getenv("FLOWERDECK_SEED")) {
    try {
      cfg.seed = std::stoull(seed);
    } catch (const std::exception&) {
      std::cerr << "FLOWERDECK_SEED must be a non-negative integer\n";
      return fd::cli::kExitInputError;
    }
  }
  return fd::cli::run(cfg, std::cout, std::cerr);
}
