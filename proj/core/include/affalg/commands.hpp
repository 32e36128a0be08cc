#ifndef AFFALG_COMMANDS_HPP
#define AFFALG_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace affalg {

/// Exit codes: 0 all checks pass, 1 violation or failed operation, 2 input
/// error (syntax, schema, field).
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

/// Full command-line entry point (check, build, fiber, extract, twist,
/// derive, homcheck, roundtrip); the binary in tools/ is a thin wrapper.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace affalg

#endif
