#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schwarz {

/// Entry point of the `schwarz` tool. `args` excludes the program name.
/// Returns 0 (pass), 1 (usage or spec error) or 2 (numerical failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schwarz
