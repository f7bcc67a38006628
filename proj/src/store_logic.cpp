#include "sepsem/store_logic.hpp"

#include "sepsem/errors.hpp"

#include <vector>

namespace sepsem {

namespace {

// Both models decide satisfaction the same way once a store is reduced to
// its defined locations: Top always holds, x |-> i holds iff the store is
// defined at gamma(x) with value i, and star enumerates ordered pairs of
// disjoint sub-domains (a three-way left/right/neither assignment of each
// location). Sub-stores are subsets of the defined locations, so a domain
// is a bitmask over a fixed location vector and results memoize per
// (formula node, bitmask).
template <typename K>
class StoreEval {
public:
    StoreEval(const std::map<K, std::int64_t>& store, const std::map<std::string, K>& subst)
        : subst_(subst) {
        for (const auto& [k, v] : store) {
            keys_.push_back(k);
            values_.push_back(v);
        }
    }

    bool sat(const StoreProp& prop) {
        std::uint64_t full = keys_.size() == 64 ? ~0ull : (1ull << keys_.size()) - 1;
        return sat(prop, full);
    }

private:
    bool sat(const StoreProp& prop, std::uint64_t domain) {
        using Kind = StoreProp::Kind;
        switch (prop.kind()) {
        case Kind::top: return true;
        case Kind::atom: {
            const StoreAtom& a = prop.get_atom();
            auto loc = subst_.find(a.var);
            if (loc == subst_.end())
                return false; // unreachable for validated inputs
            for (std::size_t i = 0; i < keys_.size(); ++i)
                if ((domain >> i) & 1 && keys_[i] == loc->second)
                    return values_[i] == a.value;
            return false; // undefined location: false, not an error
        }
        case Kind::conj: return sat(prop.lhs(), domain) && sat(prop.rhs(), domain);
        case Kind::disj: return sat(prop.lhs(), domain) || sat(prop.rhs(), domain);
        case Kind::star: break;
        }

        auto key = std::make_pair(prop.id(), domain);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        bool found = false;
        // iterate left over all submasks of domain, right over submasks of
        // the rest
        std::uint64_t left = domain;
        while (!found) {
            std::uint64_t rest = domain & ~left;
            std::uint64_t right = rest;
            while (true) {
                if (sat(prop.lhs(), left) && sat(prop.rhs(), right)) {
                    found = true;
                    break;
                }
                if (right == 0)
                    break;
                right = (right - 1) & rest;
            }
            if (left == 0)
                break;
            left = (left - 1) & domain;
        }
        memo_[key] = found;
        return found;
    }

    std::vector<K> keys_;
    std::vector<std::int64_t> values_;
    const std::map<std::string, K>& subst_;
    std::map<std::pair<const void*, std::uint64_t>, bool> memo_;
};

template <typename K>
bool sat_core(const std::map<K, std::int64_t>& store, const std::map<std::string, K>& subst,
              const StoreProp& prop, const EvalOptions& opts) {
    if (store.size() > 64)
        throw budget_error("store has more than 64 locations");
    if (prop.contains_star() && store.size() > opts.store_star_max_locations)
        throw budget_error("star split enumeration over " + std::to_string(store.size()) +
                           " locations exceeds the budget of " +
                           std::to_string(opts.store_star_max_locations));
    return StoreEval<K>(store, subst).sat(prop);
}

} // namespace

bool sat_store_m1(const Shape& shape, const Valuation& s, const SubstM1& subst,
                  const StoreProp& prop, const EvalOptions& opts) {
    for (const auto& [loc, _] : s)
        if (!shape.count(loc))
            throw input_error("valuation defined outside its shape at " + loc);
    for (const std::string& var : prop.free_vars()) {
        auto it = subst.find(var);
        if (it == subst.end())
            throw input_error("substitution undefined on variable " + var);
        if (!shape.count(it->second))
            throw input_error("substitution sends " + var + " outside the shape");
    }
    return sat_core(s, subst, prop, opts);
}

bool sat_store_m2(const NomStore& s, const SubstM2& subst, const StoreProp& prop,
                  const EvalOptions& opts) {
    for (const std::string& var : prop.free_vars())
        if (!subst.count(var))
            throw input_error("substitution undefined on variable " + var);
    return sat_core(s, subst, prop, opts);
}

std::map<Loc, Nat> enc_shape(const Shape& shape) {
    std::map<Loc, Nat> enc;
    Nat next = 0;
    for (const Loc& loc : shape) // std::set iterates in sorted order
        enc[loc] = next++;
    return enc;
}

std::pair<NomStore, SubstM2> translate_store(const Shape& shape, const Valuation& s,
                                             const SubstM1& subst) {
    auto enc = enc_shape(shape);
    NomStore store;
    for (const auto& [loc, v] : s) {
        auto it = enc.find(loc);
        if (it == enc.end())
            throw input_error("valuation defined outside its shape at " + loc);
        store[it->second] = v;
    }
    SubstM2 out;
    for (const auto& [var, loc] : subst) {
        auto it = enc.find(loc);
        if (it == enc.end())
            throw input_error("substitution sends " + var + " outside the shape");
        out[var] = it->second;
    }
    return {std::move(store), std::move(out)};
}

NomStore act(const NomStore& s, const FinPerm& pi) {
    NomStore out;
    for (const auto& [n, v] : s)
        out[pi.apply_inv(n)] = v; // (s.pi)(m) = s(pi(m)), so m = pi^-1(n)
    return out;
}

SubstM2 act(const SubstM2& subst, const FinPerm& pi) {
    SubstM2 out;
    for (const auto& [var, n] : subst)
        out[var] = pi.apply_inv(n);
    return out;
}

} // namespace sepsem
