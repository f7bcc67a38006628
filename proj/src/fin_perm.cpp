#include "sepsem/fin_perm.hpp"

#include "sepsem/errors.hpp"

#include <set>

namespace sepsem {

FinPerm FinPerm::from_pairs(const std::vector<std::pair<Nat, Nat>>& pairs) {
    FinPerm p;
    std::set<Nat> targets;
    for (const auto& [n, pn] : pairs) {
        if (p.fwd_.count(n))
            throw input_error("duplicate source in permutation");
        if (!targets.insert(pn).second)
            throw input_error("duplicate target in permutation");
        p.fwd_[n] = pn;
    }
    // valid iff sources and targets are the same set (everything else is fixed)
    for (const auto& [n, pn] : p.fwd_)
        if (!p.fwd_.count(pn))
            throw input_error("mapping is not a bijection on its support");
    // drop fixed points so the stored support is minimal
    std::erase_if(p.fwd_, [](const auto& kv) { return kv.first == kv.second; });
    for (const auto& [n, pn] : p.fwd_)
        p.bwd_[pn] = n;
    return p;
}

FinPerm FinPerm::transposition(Nat a, Nat b) {
    if (a == b)
        return FinPerm();
    return from_pairs({{a, b}, {b, a}});
}

FinPerm FinPerm::cycle(const std::vector<Nat>& points) {
    std::vector<std::pair<Nat, Nat>> pairs;
    for (std::size_t i = 0; i < points.size(); ++i)
        pairs.emplace_back(points[i], points[(i + 1) % points.size()]);
    return from_pairs(pairs);
}

Nat FinPerm::apply(Nat n) const {
    auto it = fwd_.find(n);
    return it == fwd_.end() ? n : it->second;
}

Nat FinPerm::apply_inv(Nat n) const {
    auto it = bwd_.find(n);
    return it == bwd_.end() ? n : it->second;
}

FinPerm FinPerm::inverse() const {
    FinPerm p;
    p.fwd_ = bwd_;
    p.bwd_ = fwd_;
    return p;
}

FinPerm compose(const FinPerm& a, const FinPerm& b) {
    std::set<Nat> support;
    for (const auto& [n, _] : a.mapping())
        support.insert(n);
    for (const auto& [n, _] : b.mapping())
        support.insert(n);
    std::vector<std::pair<Nat, Nat>> pairs;
    for (Nat n : support)
        pairs.emplace_back(n, a.apply(b.apply(n)));
    return FinPerm::from_pairs(pairs);
}

} // namespace sepsem
