#ifndef ECSWITCH_TOOLS_CLI_HH
#define ECSWITCH_TOOLS_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace ecswitch::cli
{
    enum ExitCode : int
    {
        exit_yes = 0,
        exit_no = 1,
        exit_usage = 2,
        exit_budget = 3,
        exit_mismatch = 4
    };

    /// Runs one command line (args excludes the program name) and returns
    /// the exit code. Everything printed goes to out or err.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
