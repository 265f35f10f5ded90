#ifndef ZFCUBE_CLI_HPP
#define ZFCUBE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zfcube::cli {

enum ExitCode : int {
    exit_pass = 0,
    exit_fail = 1,
    exit_usage = 2
};

/// Runs one invocation. args excludes the program name. Results go to out;
/// diagnostics and the one-line JSON run manifest go to err. "-" as an
/// input path reads from in.
auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;

}

#endif
