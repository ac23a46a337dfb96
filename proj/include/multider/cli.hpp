#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multider::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one CLI invocation. Exit codes: 0 when the verdict is basis / every
/// check passes, 1 on a mathematical failure (non-member, dependence,
/// conjecture counterexample), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace multider::cli
