#ifndef DEG2_CLI_HPP_
#define DEG2_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace deg2 {

// Runs one CLI invocation; args exclude the program name. Returns the
// process exit code: 0 when the command ran, 1 when a verified claim or
// certificate failed, 2 on usage or input errors.
int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace deg2

#endif  // DEG2_CLI_HPP_
