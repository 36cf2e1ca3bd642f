#pragma once

#include <iosfwd>

namespace qint {

/// Entry point shared by the binary and the tests. argv follows main()
/// conventions (argv[0] is the program name). Reports go to `out`, usage
/// errors to `err`. Returns the process exit code: 0 on success or a
/// passing verification, 1 on a verification failure or evaluation error,
/// 2 on a usage, syntax, or type error.
int run_command(int argc, const char* const* argv, std::ostream& out,
                std::ostream& err);

}  // namespace qint
