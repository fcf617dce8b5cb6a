#ifndef PFHODGE_TOOLS_CLI_HPP
#define PFHODGE_TOOLS_CLI_HPP

#include <iosfwd>

namespace pfhodge {

enum ExitCode { EXIT_OK = 0, EXIT_MISMATCH = 1, EXIT_ANALYSIS = 2, EXIT_ANNOTATION = 3, EXIT_CERTIFICATION = 4 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pfhodge

#endif
