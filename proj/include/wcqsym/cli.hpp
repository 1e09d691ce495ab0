#ifndef WCQSYM_CLI_HPP
#define WCQSYM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wcqsym
{

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // verification or numeric failure
    kExitUsage = 2,    // usage or parse error
};

// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace wcqsym

#endif
