#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turanlab {

// Command-line front end.  `args` holds the arguments without the program
// name.  Returns the process exit code: 0 on success, 1 when a verification
// found a mismatch where equality was demanded (or an audit found a
// violation), 2 on usage and domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turanlab
