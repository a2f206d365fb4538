#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropid::cli {

// Exit status 0 on success (or a passing verdict), 1 when the command asked
// a yes/no question and the answer is a counterexample or mismatch, 2 on
// usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropid::cli
