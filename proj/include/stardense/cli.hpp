#pragma once

// Command-line front end.  run() executes one subcommand and returns the
// process exit code: 0 on success, 1 on a domain error (invalid mathematical
// input or a failed reproduction check), 2 on a usage error.  All reports go
// to stdout as JSON (or CSV where requested); diagnostics go to stderr.

#include <string>
#include <vector>

namespace stardense::cli {

int run(int argc, char** argv);
int run(const std::vector<std::string>& args);  // args without the program name

}  // namespace stardense::cli
