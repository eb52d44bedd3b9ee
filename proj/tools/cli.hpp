#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sso::cli
{

inline constexpr int exit_ok = 0;       // opaque, enforced, or command succeeded
inline constexpr int exit_negative = 1; // not opaque, or enforcement impossible
inline constexpr int exit_usage = 2;    // bad arguments, unreadable or invalid model

/// Runs `ssoctl` with `args` (program name excluded).
int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace sso::cli
