#include "sepsem/pw_affine.hpp"

#include "sepsem/errors.hpp"

#include <algorithm>

namespace sepsem {

namespace {

Rat slope(const AffinePiece& p) {
    return (p.dst_hi - p.dst_lo) / (p.src_hi - p.src_lo);
}

Rat forward(const AffinePiece& p, const Rat& x) {
    return p.dst_lo + (x - p.src_lo) * slope(p);
}

Rat backward(const AffinePiece& p, const Rat& y) {
    return p.src_lo + (y - p.dst_lo) / slope(p);
}

void check_tiles(std::vector<std::pair<Rat, Rat>> spans, const char* which) {
    std::sort(spans.begin(), spans.end());
    Rat cursor = 0;
    for (const auto& [lo, hi] : spans) {
        if (lo != cursor)
            throw input_error(std::string(which) + " intervals do not tile [0,1)");
        cursor = hi;
    }
    if (cursor != 1)
        throw input_error(std::string(which) + " intervals do not tile [0,1)");
}

} // namespace

PwAffine::PwAffine() {
    pieces_.push_back({Rat(0), Rat(1), Rat(0), Rat(1)});
}

PwAffine PwAffine::from_pieces(std::vector<AffinePiece> pieces) {
    if (pieces.empty())
        throw input_error("piecewise-affine map needs at least one piece");
    std::vector<std::pair<Rat, Rat>> srcs, dsts;
    for (const AffinePiece& p : pieces) {
        if (!(0 <= p.src_lo && p.src_lo < p.src_hi && p.src_hi <= 1) ||
            !(0 <= p.dst_lo && p.dst_lo < p.dst_hi && p.dst_hi <= 1))
            throw input_error("affine piece endpoints must satisfy 0 <= lo < hi <= 1");
        srcs.emplace_back(p.src_lo, p.src_hi);
        dsts.emplace_back(p.dst_lo, p.dst_hi);
    }
    check_tiles(std::move(srcs), "source");
    check_tiles(std::move(dsts), "target");

    std::sort(pieces.begin(), pieces.end(),
              [](const AffinePiece& a, const AffinePiece& b) { return a.src_lo < b.src_lo; });
    PwAffine out;
    out.pieces_.clear();
    for (AffinePiece& p : pieces) {
        if (!out.pieces_.empty()) {
            AffinePiece& last = out.pieces_.back();
            if (last.src_hi == p.src_lo && last.dst_hi == p.dst_lo && slope(last) == slope(p)) {
                last.src_hi = p.src_hi;
                last.dst_hi = p.dst_hi;
                continue;
            }
        }
        out.pieces_.push_back(std::move(p));
    }
    return out;
}

bool PwAffine::is_identity() const {
    return *this == PwAffine();
}

Rat PwAffine::apply(const Rat& x) const {
    for (const AffinePiece& p : pieces_)
        if (p.src_lo <= x && x < p.src_hi)
            return forward(p, x);
    throw input_error("point outside [0,1)");
}

Rat PwAffine::apply_inv(const Rat& y) const {
    for (const AffinePiece& p : pieces_)
        if (p.dst_lo <= y && y < p.dst_hi)
            return backward(p, y);
    throw input_error("point outside [0,1)");
}

PwAffine PwAffine::inverse() const {
    std::vector<AffinePiece> flipped;
    flipped.reserve(pieces_.size());
    for (const AffinePiece& p : pieces_)
        flipped.push_back({p.dst_lo, p.dst_hi, p.src_lo, p.src_hi});
    return from_pieces(std::move(flipped));
}

IntervalSet PwAffine::preimage(const IntervalSet& s) const {
    std::vector<IntervalSet::Piece> raw;
    for (const AffinePiece& p : pieces_) {
        IntervalSet hit = set_intersect(s, IntervalSet::interval(p.dst_lo, p.dst_hi));
        for (const auto& [lo, hi] : hit.pieces())
            raw.emplace_back(backward(p, lo), backward(p, hi));
    }
    return IntervalSet::from_pairs(std::move(raw));
}

IntervalSet PwAffine::image(const IntervalSet& s) const {
    std::vector<IntervalSet::Piece> raw;
    for (const AffinePiece& p : pieces_) {
        IntervalSet hit = set_intersect(s, IntervalSet::interval(p.src_lo, p.src_hi));
        for (const auto& [lo, hi] : hit.pieces())
            raw.emplace_back(forward(p, lo), forward(p, hi));
    }
    return IntervalSet::from_pairs(std::move(raw));
}

PwAffine compose(const PwAffine& a, const PwAffine& b) {
    std::vector<AffinePiece> pieces;
    for (const AffinePiece& inner : b.pieces()) {
        // split the inner piece wherever its target crosses a source
        // boundary of the outer map
        for (const AffinePiece& outer : a.pieces()) {
            Rat lo = std::max(inner.dst_lo, outer.src_lo);
            Rat hi = std::min(inner.dst_hi, outer.src_hi);
            if (lo >= hi)
                continue;
            pieces.push_back({backward(inner, lo), backward(inner, hi), forward(outer, lo),
                              forward(outer, hi)});
        }
    }
    return PwAffine::from_pieces(std::move(pieces));
}

MeasuredPartition act(const MeasuredPartition& p, const PwAffine& pi) {
    std::vector<MeasuredPartition::WeightedCell> cells;
    for (std::size_t i = 0; i < p.size(); ++i)
        cells.emplace_back(pi.preimage(p.partition().cells()[i]), p.mass(i));
    return MeasuredPartition(std::move(cells));
}

bool fixes_partition(const PwAffine& pi, const MPartition& a) {
    for (const IntervalSet& cell : a.cells())
        if (pi.preimage(cell) != cell)
            return false;
    return true;
}

std::vector<AffinePiece> proportional_pieces(const IntervalSet& src, const IntervalSet& dst) {
    if (src.empty() || dst.empty())
        throw input_error("proportional matching needs nonempty sets");
    const Rat ratio = dst.measure() / src.measure();

    // cumulative start offsets of every piece on both sides, measured in
    // source-length units
    std::vector<Rat> cuts;
    Rat acc = 0;
    for (const auto& [lo, hi] : src.pieces()) {
        cuts.push_back(acc);
        acc += hi - lo;
    }
    const Rat total = acc;
    acc = 0;
    for (const auto& [lo, hi] : dst.pieces()) {
        cuts.push_back(acc / ratio);
        acc += hi - lo;
    }
    cuts.push_back(total);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // absolute position at cumulative offset u within an interval set; an
    // offset on a piece boundary resolves to the next piece's start when
    // opening a segment and to the current piece's end when closing one
    auto locate = [](const IntervalSet& s, const Rat& u, bool opening) {
        Rat remaining = u;
        for (const auto& [lo, hi] : s.pieces()) {
            if (remaining < hi - lo || (!opening && remaining == hi - lo))
                return Rat(lo + remaining);
            remaining -= hi - lo;
        }
        throw input_error("offset beyond set length");
    };

    std::vector<AffinePiece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        out.push_back({locate(src, cuts[i], true), locate(src, cuts[i + 1], false),
                       locate(dst, cuts[i] * ratio, true), locate(dst, cuts[i + 1] * ratio, false)});
    return out;
}

PwAffine homogeneity_auto(const std::map<std::string, std::string>& p, const Decoder& dec_prime,
                          const Decoder& dec) {
    for (const std::string& point : dec_prime.omega())
        if (!p.count(point))
            throw input_error("surjection undefined on point " + point);
    for (const auto& [from, to] : p) {
        if (!std::binary_search(dec_prime.omega().begin(), dec_prime.omega().end(), from))
            throw input_error("surjection defined on unknown point " + from);
        if (!std::binary_search(dec.omega().begin(), dec.omega().end(), to))
            throw input_error("surjection hits unknown point " + to);
    }

    std::vector<AffinePiece> pieces;
    for (const std::string& target : dec.omega()) {
        IntervalSet source;
        for (const auto& [from, to] : p)
            if (to == target)
                source = set_union(source, dec_prime.fiber(from));
        if (source.empty())
            throw input_error("map is not surjective: nothing hits " + target);
        auto matched = proportional_pieces(source, dec.fiber(target));
        pieces.insert(pieces.end(), matched.begin(), matched.end());
    }
    return PwAffine::from_pieces(std::move(pieces));
}

PwAffine correspondence_witness(const MPartition& a, const MPartition& b) {
    if (is_coarser(b, a))
        throw input_error("no correspondence witness: the first partition is finer "
                          "than the second");

    // first a-cell (canonical order) meeting two b-cells nonnegligibly
    for (const IntervalSet& cell : a.cells()) {
        IntervalSet first, second;
        for (const IntervalSet& other : b.cells()) {
            IntervalSet inter = set_intersect(cell, other);
            if (inter.empty())
                continue;
            if (first.empty()) {
                first = std::move(inter);
            } else {
                second = std::move(inter);
                break;
            }
        }
        if (second.empty())
            continue;

        std::vector<AffinePiece> pieces = proportional_pieces(first, second);
        auto back = proportional_pieces(second, first);
        pieces.insert(pieces.end(), back.begin(), back.end());
        const IntervalSet untouched = set_union(first, second).complement();
        for (const auto& [lo, hi] : untouched.pieces())
            pieces.push_back({lo, hi, lo, hi});
        return PwAffine::from_pieces(std::move(pieces));
    }
    throw input_error("no a-cell meets two b-cells"); // unreachable given the precheck
}

} // namespace sepsem
