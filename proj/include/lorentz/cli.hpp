#pragma once

// Command-line front end. Every subcommand prints one JSON document
//   {"command", "lattice", "config", "result"}
// Exit codes: 0 success, 1 domain error, 2 usage error or unreadable lattice.

#include <iosfwd>
#include <string>
#include <vector>

namespace lorentz::cli {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorentz::cli
