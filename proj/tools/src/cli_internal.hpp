#pragma once

#include <jumploci/exact/json_io.hpp>

#include <CLI11.hpp>

#include <functional>
#include <string>

namespace jl::cli {

// Result of one command: the document to emit and the exit code (0, or 1 when
// a requested structural check found violations).
struct Outcome {
  Json doc;
  int code = 0;
};

// The selected command is recorded during parsing and run afterwards so that
// parse failures and mathematical failures map to different exit codes.
struct Dispatch {
  std::function<Outcome()> action;
};

// Adds `--check` to a command group; selected when no subcommand is given.
void add_group_check(CLI::App* group, const std::string& name, Dispatch& d);

Json read_json_file(const std::string& path);
Json document(const std::string& kind);  // {schema, kind}

void add_linf(CLI::App& app, Dispatch& d);
void add_defjump(CLI::App& app, Dispatch& d);
void add_detvar(CLI::App& app, Dispatch& d);
void add_bn(CLI::App& app, Dispatch& d);
void add_oracle(CLI::App& app, Dispatch& d);

// Invariant suites behind `<group> --check`; exit code 4 when any fails.
Outcome run_checks(const std::string& group);

std::string render_table(const Json& doc);

}  // namespace jl::cli
