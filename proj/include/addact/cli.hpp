#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace addact {

// Argument-vector entry point behind the addact binary.  `args` excludes the
// program name.  Writes one structured document to `out` (--format text|json)
// and diagnostics to `err`.  Returns the process exit status: 0 on success,
// 1 on a domain error, 2 on malformed input or a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace addact
