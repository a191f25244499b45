#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace udg {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,             // bad arguments, unreadable input, invalid solution
  kExitClassCertificate = 2,  // input provably outside the claimed graph class
};

/// Entry point of `udgapx`; args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace udg
