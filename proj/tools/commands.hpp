#pragma once

// zdlab command layer.  Parameters come from built-in defaults, then the
// JSON config (top level, then the section named after the command), then
// flags; unknown keys are rejected.

#include <string>
#include <vector>

#include "zdl/error.hpp"
#include "zdl/report.hpp"

namespace zdlab {

using zdl::Json;

struct Invocation {
  std::string command;
  Json params;  // effective, fully typed
};

// Keys a command accepts, with their defaults.
const std::vector<std::string>& commands();
Json defaults(const std::string& command);

// config: parsed JSON file (or null); flags: raw strings by key.
Invocation resolve(const std::string& command, const Json& config,
                   const std::vector<std::pair<std::string, std::string>>& flags);

// Runs the command; returns the exit status.  Library errors propagate.
int execute(const Invocation& inv);

// Process exit status for an error kind (2 for input/config/io problems).
int exit_code(zdl::ErrorKind kind);

}  // namespace zdlab
