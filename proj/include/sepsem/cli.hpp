#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sepsem {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;       // SAT / models agree / no violations
inline constexpr int exit_negative = 1; // UNSAT / disagreement / violations
inline constexpr int exit_input = 2;    // input or parse errors
inline constexpr int exit_budget = 3;   // enumeration budget exceeded

/// Runs the command-line driver against explicit streams; the binary wraps
/// this around std::cout/std::cerr.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sepsem
