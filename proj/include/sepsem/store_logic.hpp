#pragma once

#include "sepsem/eval_options.hpp"
#include "sepsem/fin_perm.hpp"
#include "sepsem/prop.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace sepsem {

// Model 1: valuations on a finite shape of named locations.
using Loc = std::string;
using Shape = std::set<Loc>;
using Valuation = std::map<Loc, std::int64_t>;
using SubstM1 = std::map<std::string, Loc>;

// Model 2: finite partial valuations on the naturals.
using NomStore = std::map<Nat, std::int64_t>;
using SubstM2 = std::map<std::string, Nat>;

/// x |-> value
struct StoreAtom {
    std::string var;
    std::int64_t value;

    bool operator==(const StoreAtom&) const = default;
};

using StoreProp = Prop<StoreAtom>;

/// Model-1 satisfaction. Star splits the defined locations into two
/// disjoint sub-valuations (locations may also be discarded: the logic is
/// affine). Throws input_error if s is not a valuation on shape, or the
/// substitution sends a free variable outside shape.
bool sat_store_m1(const Shape& shape, const Valuation& s, const SubstM1& subst,
                  const StoreProp& prop, const EvalOptions& opts = {});

/// Model-2 satisfaction: star asks for disjoint sub-stores whose union is
/// contained in s.
bool sat_store_m2(const NomStore& s, const SubstM2& subst, const StoreProp& prop,
                  const EvalOptions& opts = {});

/// Canonical injection of a shape into the naturals: locations in sorted
/// name order map to 0,1,2,...
std::map<Loc, Nat> enc_shape(const Shape& shape);

/// Transports a Model-1 instance to Model 2 along enc_shape.
std::pair<NomStore, SubstM2> translate_store(const Shape& shape, const Valuation& s,
                                             const SubstM1& subst);

// Right actions of the finite-support permutation group.
NomStore act(const NomStore& s, const FinPerm& pi);   // s . pi = s o pi
SubstM2 act(const SubstM2& subst, const FinPerm& pi); // gamma . pi = pi^-1 o gamma

} // namespace sepsem
