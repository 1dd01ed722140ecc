#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace specnet {

// Runs one subcommand; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// A weave path as given, else looked up by file name in the shipped data.
std::string resolve_weave_path(const std::string& path);
// A fixture path as given, else under $SPECNET_FIXTURES, else shipped data.
std::string resolve_fixture_path(const std::string& path);

}  // namespace specnet
