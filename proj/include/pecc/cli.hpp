#ifndef PECC_CLI_HPP
#define PECC_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace pecc {

// Entry point behind the `pecc` binary: subcommands solve | bench | render.
// Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace pecc

#endif
