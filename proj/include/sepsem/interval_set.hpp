#pragma once

#include "sepsem/rat.hpp"

#include <utility>
#include <vector>

namespace sepsem {

/// Canonical finite union of half-open rational subintervals of [0,1).
///
/// Pieces are pairwise disjoint, sorted by left endpoint and non-adjacent
/// (each piece ends strictly before the next begins), so the representation
/// is a unique normal form: two interval sets are almost-everywhere equal
/// iff they compare equal.
class IntervalSet {
public:
    using Piece = std::pair<Rat, Rat>; // [first, second)

    IntervalSet() = default; // empty set

    /// Canonical form of the union of the given [a,b) pairs; degenerate
    /// pairs a = b are dropped. Throws input_error unless 0 <= a <= b <= 1.
    static IntervalSet from_pairs(std::vector<Piece> raw);

    /// Single interval [a,b); same validation as from_pairs.
    static IntervalSet interval(const Rat& a, const Rat& b);

    /// The whole universe [0,1).
    static IntervalSet full();

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    /// Lebesgue measure: sum of piece lengths.
    Rat measure() const;

    /// Pointwise membership (the canonical representative, not the a.e. class).
    bool contains(const Rat& x) const;

    /// Left endpoint of the first piece; requires a nonempty set.
    const Rat& leftmost() const;

    /// Complement relative to [0,1).
    IntervalSet complement() const;

    bool subset_of(const IntervalSet& other) const;

    bool operator==(const IntervalSet&) const = default;
    // a.e. equality coincides with representation equality by canonicity
    bool ae_equal(const IntervalSet& other) const { return *this == other; }

    friend IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet set_diff(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet symm_diff(const IntervalSet& a, const IntervalSet& b);

    std::string to_string() const;

private:
    std::vector<Piece> pieces_;
};

/// Splits s into parts.size() consecutive chunks whose measures are
/// proportional to the given positive fractions (which must sum to 1).
std::vector<IntervalSet> split_proportional(const IntervalSet& s, const std::vector<Rat>& parts);

} // namespace sepsem
