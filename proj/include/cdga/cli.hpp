#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace cdga {

// Runs one command line (program name excluded). Returns the process exit
// code: 0 success, 1 failed validation or precondition, 2 unreadable or
// unparsable input, 3 internal inconsistency.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace cdga
