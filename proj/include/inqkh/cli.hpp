#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inqkh {

// Dispatches one CLI invocation (argv without the program name).
// Exit codes: 0 positive verdict / success, 1 negative verdict (with a
// machine-readable witness on out when one exists), 2 usage/parse/budget
// errors (message on err).
int runCommand(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace inqkh
