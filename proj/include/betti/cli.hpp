#pragma once

// Command-line surface. run() owns all argument parsing, dispatch, and
// exit-code mapping; main() is a one-liner on top of it.

#include <iosfwd>

namespace betti {

// Exit codes: 0 success, 1 usage error, 2 parse/domain error, 3 engine
// disagreement under --engine both, 4 resource cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace betti
