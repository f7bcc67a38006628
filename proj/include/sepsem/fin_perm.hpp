#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace sepsem {

using Nat = std::uint32_t;

/// Permutation of the naturals with finite support, stored as its minimal
/// support mapping (no fixed points recorded). Points outside the support
/// are fixed.
class FinPerm {
public:
    FinPerm() = default; // identity

    /// Builds from (n, pi(n)) pairs; throws input_error unless they form a
    /// bijection on their support.
    static FinPerm from_pairs(const std::vector<std::pair<Nat, Nat>>& pairs);

    static FinPerm transposition(Nat a, Nat b);

    /// cycle({a,b,c}) maps a->b->c->a.
    static FinPerm cycle(const std::vector<Nat>& points);

    Nat apply(Nat n) const;
    Nat apply_inv(Nat n) const;

    FinPerm inverse() const;

    const std::map<Nat, Nat>& mapping() const { return fwd_; }
    bool is_identity() const { return fwd_.empty(); }

    bool operator==(const FinPerm&) const = default;

private:
    std::map<Nat, Nat> fwd_;
    std::map<Nat, Nat> bwd_;
};

/// Function composition: compose(a,b) maps n to a(b(n)), so right actions
/// satisfy x . compose(a,b) = (x . a) . b.
FinPerm compose(const FinPerm& a, const FinPerm& b);

} // namespace sepsem
