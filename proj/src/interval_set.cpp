#include "sepsem/interval_set.hpp"

#include "sepsem/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sepsem {

IntervalSet IntervalSet::from_pairs(std::vector<Piece> raw) {
    for (const auto& [a, b] : raw) {
        if (a < 0 || b > 1)
            throw input_error("interval endpoint outside [0,1]: [" + rat_to_string(a) + "," +
                              rat_to_string(b) + ")");
        if (a > b)
            throw input_error("interval with reversed endpoints: [" + rat_to_string(a) + "," +
                              rat_to_string(b) + ")");
    }
    std::erase_if(raw, [](const Piece& p) { return p.first == p.second; });
    std::sort(raw.begin(), raw.end());
    IntervalSet out;
    for (auto& p : raw) {
        if (!out.pieces_.empty() && p.first <= out.pieces_.back().second)
            out.pieces_.back().second = std::max(out.pieces_.back().second, p.second);
        else
            out.pieces_.push_back(std::move(p));
    }
    return out;
}

IntervalSet IntervalSet::interval(const Rat& a, const Rat& b) {
    return from_pairs({{a, b}});
}

IntervalSet IntervalSet::full() {
    return interval(Rat(0), Rat(1));
}

Rat IntervalSet::measure() const {
    Rat total = 0;
    for (const auto& [a, b] : pieces_)
        total += b - a;
    return total;
}

bool IntervalSet::contains(const Rat& x) const {
    for (const auto& [a, b] : pieces_) {
        if (x < a)
            return false;
        if (x < b)
            return true;
    }
    return false;
}

const Rat& IntervalSet::leftmost() const {
    if (pieces_.empty())
        throw input_error("leftmost endpoint of an empty interval set");
    return pieces_.front().first;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<IntervalSet::Piece> raw = a.pieces_;
    raw.insert(raw.end(), b.pieces_.begin(), b.pieces_.end());
    return IntervalSet::from_pairs(std::move(raw));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out;
    auto i = a.pieces_.begin();
    auto j = b.pieces_.begin();
    while (i != a.pieces_.end() && j != b.pieces_.end()) {
        Rat lo = std::max(i->first, j->first);
        Rat hi = std::min(i->second, j->second);
        if (lo < hi)
            out.pieces_.emplace_back(lo, hi);
        // advance whichever piece ends first
        if (i->second < j->second)
            ++i;
        else
            ++j;
    }
    return out; // pieces stay sorted, disjoint and non-adjacent
}

IntervalSet IntervalSet::complement() const {
    IntervalSet out;
    Rat cursor = 0;
    for (const auto& [a, b] : pieces_) {
        if (cursor < a)
            out.pieces_.emplace_back(cursor, a);
        cursor = b;
    }
    if (cursor < 1)
        out.pieces_.emplace_back(cursor, Rat(1));
    return out;
}

IntervalSet set_diff(const IntervalSet& a, const IntervalSet& b) {
    return set_intersect(a, b.complement());
}

IntervalSet symm_diff(const IntervalSet& a, const IntervalSet& b) {
    return set_union(set_diff(a, b), set_diff(b, a));
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
    return set_intersect(*this, other) == *this;
}

std::string IntervalSet::to_string() const {
    if (pieces_.empty())
        return "{}";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, b] : pieces_) {
        if (!first)
            os << " u ";
        first = false;
        os << "[" << rat_to_string(a) << "," << rat_to_string(b) << ")";
    }
    return os.str();
}

std::vector<IntervalSet> split_proportional(const IntervalSet& s, const std::vector<Rat>& parts) {
    if (s.empty())
        throw input_error("cannot split an empty interval set");
    if (parts.empty())
        throw input_error("empty proportion list");
    Rat sum = 0;
    for (const Rat& f : parts) {
        if (f <= 0)
            throw input_error("split proportions must be positive");
        sum += f;
    }
    if (sum != 1)
        throw input_error("split proportions must sum to 1");

    const Rat total = s.measure();
    std::vector<IntervalSet> out;
    auto piece = s.pieces().begin();
    Rat used = 0; // length already consumed from the current piece
    Rat acc = 0;  // cumulative target measure
    for (std::size_t k = 0; k < parts.size(); ++k) {
        acc += parts[k] * total;
        std::vector<IntervalSet::Piece> chunk;
        Rat have = k == 0 ? Rat(0) : Rat(acc - parts[k] * total);
        Rat need = acc - have;
        while (need > 0) {
            Rat avail = piece->second - piece->first - used;
            Rat take = std::min(avail, need);
            chunk.emplace_back(piece->first + used, piece->first + used + take);
            used += take;
            need -= take;
            if (used == piece->second - piece->first && std::next(piece) != s.pieces().end()) {
                ++piece;
                used = 0;
            }
        }
        out.push_back(IntervalSet::from_pairs(std::move(chunk)));
    }
    return out;
}

} // namespace sepsem
