#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sinkloc::cli {

/// Runs one `sinkloc` invocation. `args` excludes the program name.
/// Returns the process exit status: 0 when a document or report was
/// produced, nonzero on usage, input or budget errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sinkloc::cli
