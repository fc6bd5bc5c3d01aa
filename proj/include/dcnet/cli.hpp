#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dcnet {

// Full command-line surface, callable in-process for tests. args excludes
// the program name. Returns 0 on success, 1 for domain errors (the error
// name is printed to err), 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcnet
