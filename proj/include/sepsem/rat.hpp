#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sepsem {

/// Exact rational number. Always in lowest terms with positive denominator;
/// arithmetic never rounds.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Parses "p/q" or "n". Throws input_error on malformed text or q = 0.
Rat rat_from_string(std::string_view s);

/// Renders as "p/q", or "n" when the denominator is 1.
std::string rat_to_string(const Rat& r);

} // namespace sepsem
