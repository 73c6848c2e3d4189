#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace upward::cli {

// Command-line surface over the library. `args` excludes the program name.
// Reports go to `out` as canonical documents, diagnostics to `err`.
//
// Exit codes: 0 success (for `equiv`: equivalent; for boolean commands:
// positive), 1 negative result (invalid drawing, not-equivalent, failed
// chain), 2 incomparable inputs (`equiv` only), 3 input or usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace upward::cli
