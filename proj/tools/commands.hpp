#pragma once

#include <iosfwd>

namespace probekit::cli {

// Exit codes: 0 success or affirmative, 1 negative answer, 2 usage or
// input error, 3 undecided.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace probekit::cli
