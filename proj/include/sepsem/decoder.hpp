#pragma once

#include "sepsem/interval_set.hpp"

#include <map>
#include <string>
#include <vector>

namespace sepsem {

/// Finite nonempty sample space: sorted unique point names.
using FinOmega = std::vector<std::string>;

/// Throws input_error unless omega is nonempty with unique names; sorts it.
FinOmega make_omega(std::vector<std::string> points);

/// A map [0,1) -> omega with nonnegligible fibers: encodes a finite sample
/// space as a partition of the unit interval. Fibers are disjoint and cover
/// [0,1).
class Decoder {
public:
    Decoder(FinOmega omega, std::map<std::string, IntervalSet> fibers);

    const FinOmega& omega() const { return omega_; }
    const IntervalSet& fiber(const std::string& point) const;
    const std::map<std::string, IntervalSet>& fibers() const { return fibers_; }

    /// Decodes a sample: the point whose fiber contains x.
    const std::string& decode(const Rat& x) const;

    bool operator==(const Decoder&) const = default;

private:
    FinOmega omega_;
    std::map<std::string, IntervalSet> fibers_;
};

/// Canonical decoder: points in sorted order get consecutive equal-length
/// half-open intervals.
Decoder make_decoder(const FinOmega& omega);

} // namespace sepsem
