#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace delsub::cli {

struct Command {
    std::string name;
    std::string summary;
    // library operations reachable through this subcommand
    std::vector<std::string> operations;
};

const std::vector<Command>& commands();

// args excludes the program name. Exit status: 0 success or PASS, 1 a
// verification FAIL, 2 a usage error (one diagnostic line on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delsub::cli
