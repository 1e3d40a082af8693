#ifndef PINCHLINK_CLI_HPP
#define PINCHLINK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pinchlink::cli {

/// Runs a full CLI invocation (args excludes argv[0]). Exit codes:
/// 0 success, 1 statistical validation failure, 2 configuration/usage error,
/// 3 placement infeasibility.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pinchlink::cli

#endif
