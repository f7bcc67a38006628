#pragma once

#include "sepsem/decoder.hpp"
#include "sepsem/fin_perm.hpp"
#include "sepsem/partition.hpp"
#include "sepsem/prob_logic.hpp"
#include "sepsem/pw_affine.hpp"
#include "sepsem/resource_monoid.hpp"
#include "sepsem/store_logic.hpp"

#include <json.hpp>

#include <string>

namespace sepsem {

using Json = nlohmann::json;

// Rationals travel as strings "p/q" (or "n"); interval sets as arrays of
// [a,b) endpoint string pairs. Malformed documents raise input_error.

Json to_json(const Rat& r);
Json to_json(const IntervalSet& s);
Json to_json(const MPartition& p);
Json to_json(const MeasuredPartition& p);
Json to_json(const FinPerm& p);
Json to_json(const PwAffine& p);
Json to_json(const Decoder& d);
Json to_json(const LawReport& r);

Rat rat_from_json(const Json& j);
IntervalSet interval_set_from_json(const Json& j);
MPartition mpartition_from_json(const Json& j);
MeasuredPartition measured_partition_from_json(const Json& j);
FinPerm fin_perm_from_json(const Json& j);
PwAffine pw_affine_from_json(const Json& j);
Decoder decoder_from_json(const Json& j);

/// Model-1 store instance: {"shape": [...], "store": {loc: int}, "subst": {var: loc}}
struct StoreInstanceM1 {
    Shape shape;
    Valuation store;
    SubstM1 subst;
};

/// Model-2 store instance: {"store": {"0": int, ...}, "subst": {var: nat}}
struct StoreInstanceM2 {
    NomStore store;
    SubstM2 subst;
};

/// Model-1 probability instance:
/// {"omega": [...], "atoms": [[...]...], "masses": [...], "rvs": {X: {point: int}}}
struct ProbInstanceM1 {
    FinProbSpace space;
    RandSubst subst;
};

/// Model-2 probability instance:
/// {"partition": {"cells": [...], "masses": [...]}, "rvs": {X: {"k": IntervalSet}}}
struct ProbInstanceM2 {
    MeasuredPartition partition;
    StepSubst subst;
};

Json to_json(const StoreInstanceM1& inst);
Json to_json(const StoreInstanceM2& inst);
Json to_json(const ProbInstanceM1& inst);
Json to_json(const ProbInstanceM2& inst);

StoreInstanceM1 store_m1_from_json(const Json& j);
StoreInstanceM2 store_m2_from_json(const Json& j);
ProbInstanceM1 prob_m1_from_json(const Json& j);
ProbInstanceM2 prob_m2_from_json(const Json& j);

/// Surjection file: {"map": {from: to}}
std::map<std::string, std::string> string_map_from_json(const Json& j);

/// Parses a whole document, wrapping JSON syntax errors as input_error.
Json parse_json(const std::string& text);

} // namespace sepsem
