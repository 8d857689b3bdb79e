#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtoric::cli {

// Exit codes: 0 success, 2 usage, 3 spec parse error, 4 geometry error
// (empty/unbounded/nonsimple/degenerate), 5 internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace qtoric::cli
