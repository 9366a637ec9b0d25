// Command-line front end: embed, verify, oracle, gen and draw.
#pragma once

#include <iosfwd>

namespace pagebook {

// Exit status: 0 success, 1 verification or embedding failure, 2 usage or
// parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pagebook
