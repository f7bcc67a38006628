#pragma once

#include "sepsem/decoder.hpp"
#include "sepsem/interval_set.hpp"
#include "sepsem/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace sepsem {

/// One increasing affine piece, mapping [src_lo, src_hi) onto [dst_lo, dst_hi).
struct AffinePiece {
    Rat src_lo, src_hi;
    Rat dst_lo, dst_hi;

    bool operator==(const AffinePiece&) const = default;
};

/// Piecewise-affine bijection of [0,1): sources tile [0,1), targets tile
/// [0,1), every piece increasing. Nonsingular (negligible sets map to
/// negligible sets both ways) but not measure-preserving in general.
///
/// Canonical form: pieces sorted by source with contiguous pieces of the
/// same affine map merged, so equality of representations is equality of
/// maps.
class PwAffine {
public:
    PwAffine(); // identity

    static PwAffine from_pieces(std::vector<AffinePiece> pieces);

    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    bool is_identity() const;

    Rat apply(const Rat& x) const;
    Rat apply_inv(const Rat& y) const;

    PwAffine inverse() const;

    IntervalSet preimage(const IntervalSet& s) const;
    IntervalSet image(const IntervalSet& s) const;

    bool operator==(const PwAffine&) const = default;

private:
    std::vector<AffinePiece> pieces_;
};

/// Function composition: compose(a,b) maps x to a(b(x)).
PwAffine compose(const PwAffine& a, const PwAffine& b);

/// Right action on measured partitions: cells become preimages, masses ride
/// along.
MeasuredPartition act(const MeasuredPartition& p, const PwAffine& pi);

/// True iff pi fixes every cell of the partition up to negligible sets.
bool fixes_partition(const PwAffine& pi, const MPartition& a);

/// Increasing affine pieces mapping src onto dst by matching cumulative
/// lengths proportionally. Both sets must be nonempty.
std::vector<AffinePiece> proportional_pieces(const IntervalSet& src, const IntervalSet& dst);

/// Constructive homogeneity witness: given a surjection p from dec_prime's
/// sample space onto dec's, returns pi with dec(pi(x)) = p(dec_prime(x))
/// outside a negligible set. For each target point, the union of the fibers
/// above its p-preimage is matched proportionally onto its fiber.
/// Throws input_error if p is not a surjection between the two spaces.
PwAffine homogeneity_auto(const std::map<std::string, std::string>& p, const Decoder& dec_prime,
                          const Decoder& dec);

/// Constructive correspondence witness: requires that a is NOT finer than b,
/// and returns pi fixing a but not b, built by swapping two nonnegligible
/// pieces of one a-cell that meet different b-cells. Throws input_error when
/// a is finer than b (no witness exists).
PwAffine correspondence_witness(const MPartition& a, const MPartition& b);

} // namespace sepsem
