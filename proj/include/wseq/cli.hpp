#pragma once

#include <string>
#include <vector>

namespace wseq {

// Exit codes: 0 success, 1 error (message on stderr), 2 inconclusive top-level verdict.
int cli_main(int argc, char** argv);
int cli_main(const std::vector<std::string>& args);  // args exclude the program name

}  // namespace wseq
