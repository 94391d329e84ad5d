#pragma once

#include <string>
#include <vector>

// Command-line surface.  Subcommands: modes, field, eigenmap, flowlines,
// verify.  Parameters come from a single JSON config document (--config);
// outputs are byte-stable CSV/JSON (17 significant digits, LF endings).
//
// Exit codes: 0 success, 1 invariant failure, 2 invalid input, 3 I/O failure.

namespace procaflow {

int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

// Command cores, exposed for tests: return the exact output bytes.
std::string cmd_modes_report(const std::string& config_json);
std::string cmd_field_csv(const std::string& config_json);
std::string cmd_eigenmap_csv(const std::string& config_json);
std::string cmd_flowlines_csv(const std::string& config_json);

}  // namespace procaflow
