#pragma once

#include "sepsem/prob_logic.hpp"
#include "sepsem/store_logic.hpp"

#include <string>
#include <string_view>

namespace sepsem {

// Grammar, loosest to tightest: \/ then /\ then *, all left-associative.
//
//   prop := or
//   or   := and ("\/" and)*
//   and  := star ("/\" star)*
//   star := atom ("*" atom)*
//   atom := "true" | ident "|->" int | ident "~" pmf | "(" prop ")"
//   pmf  := "ber(" rat ")" | "{" int ":" rat ("," int ":" rat)* "}"
//   rat  := int | int "/" int
//
// Store propositions use |->, probabilistic ones use ~; mixing them is a
// parse error.

StoreProp parse_store_prop(std::string_view text);
ProbProp parse_prob_prop(std::string_view text);

/// Canonical reformatting with minimal parentheses; parse(print(p)) == p.
std::string print_prop(const StoreProp& prop);
std::string print_prop(const ProbProp& prop);

} // namespace sepsem
