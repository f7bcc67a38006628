#include "sepsem/partition.hpp"

#include "sepsem/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sepsem {

namespace {

void sort_by_leftmost(std::vector<IntervalSet>& cells) {
    std::sort(cells.begin(), cells.end(), [](const IntervalSet& x, const IntervalSet& y) {
        return x.leftmost() < y.leftmost();
    });
}

void check_tiles_universe(const std::vector<IntervalSet>& cells) {
    IntervalSet all;
    Rat total = 0;
    for (const IntervalSet& c : cells) {
        if (c.empty())
            throw input_error("partition cell is negligible");
        all = set_union(all, c);
        total += c.measure();
    }
    // union == [0,1) and measures summing to 1 together force disjointness
    if (all != IntervalSet::full() || total != 1)
        throw input_error("cells do not partition [0,1)");
}

} // namespace

MPartition::MPartition(std::vector<IntervalSet> cells) {
    check_tiles_universe(cells);
    sort_by_leftmost(cells);
    cells_ = std::move(cells);
}

MPartition MPartition::unit() {
    return MPartition({IntervalSet::full()});
}

bool is_coarser(const MPartition& a, const MPartition& b) {
    for (const IntervalSet& cell : a.cells()) {
        IntervalSet covered;
        for (const IntervalSet& fine : b.cells())
            if (fine.subset_of(cell))
                covered = set_union(covered, fine);
        if (covered != cell)
            return false;
    }
    return true;
}

MPartition common_refinement(const MPartition& a, const MPartition& b) {
    std::vector<IntervalSet> cells;
    for (const IntervalSet& x : a.cells())
        for (const IntervalSet& y : b.cells()) {
            IntervalSet inter = set_intersect(x, y);
            if (!inter.empty())
                cells.push_back(std::move(inter));
        }
    return MPartition(std::move(cells));
}

MeasuredPartition::MeasuredPartition(std::vector<WeightedCell> weighted_cells)
    : MeasuredPartition(unchecked(std::move(weighted_cells))) {
    Rat total = 0;
    for (const Rat& m : masses_) {
        if (m < 0)
            throw input_error("negative cell mass");
        total += m;
    }
    if (total != 1)
        throw input_error("cell masses must sum to 1, got " + rat_to_string(total));
}

MeasuredPartition MeasuredPartition::unchecked(std::vector<WeightedCell> weighted_cells) {
    std::sort(weighted_cells.begin(), weighted_cells.end(),
              [](const WeightedCell& x, const WeightedCell& y) {
                  return x.first.leftmost() < y.first.leftmost();
              });
    std::vector<IntervalSet> cells;
    std::vector<Rat> masses;
    cells.reserve(weighted_cells.size());
    for (auto& [cell, mass] : weighted_cells) {
        cells.push_back(std::move(cell));
        masses.push_back(std::move(mass));
    }
    return MeasuredPartition(MPartition(std::move(cells)), std::move(masses));
}

MeasuredPartition MeasuredPartition::unit() {
    return MeasuredPartition({{IntervalSet::full(), Rat(1)}});
}

std::string MeasuredPartition::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i)
            os << ", ";
        os << partition_.cells()[i].to_string() << ": " << rat_to_string(masses_[i]);
    }
    os << "}";
    return os.str();
}

bool dorder(const MeasuredPartition& p, const MeasuredPartition& q) {
    if (!is_coarser(p.partition(), q.partition()))
        return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat sum = 0;
        for (std::size_t j = 0; j < q.size(); ++j)
            if (q.partition().cells()[j].subset_of(p.partition().cells()[i]))
                sum += q.mass(j);
        if (sum != p.mass(i))
            return false;
    }
    return true;
}

std::optional<MeasuredPartition> dicom(const MeasuredPartition& p, const MeasuredPartition& q) {
    std::vector<MeasuredPartition::WeightedCell> cells;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) {
            IntervalSet inter = set_intersect(p.partition().cells()[i], q.partition().cells()[j]);
            Rat product = p.mass(i) * q.mass(j);
            if (inter.empty()) {
                if (product != 0)
                    return std::nullopt;
            } else {
                cells.emplace_back(std::move(inter), std::move(product));
            }
        }
    // the definedness condition makes the surviving products sum to 1
    return MeasuredPartition(std::move(cells));
}

MeasuredPartition coarsen(const MeasuredPartition& p,
                          const std::vector<std::vector<std::size_t>>& grouping) {
    std::vector<bool> seen(p.size(), false);
    std::vector<MeasuredPartition::WeightedCell> cells;
    for (const auto& group : grouping) {
        if (group.empty())
            throw input_error("empty group in coarsening");
        IntervalSet cell;
        Rat mass = 0;
        for (std::size_t idx : group) {
            if (idx >= p.size() || seen[idx])
                throw input_error("grouping is not a partition of the cell indices");
            seen[idx] = true;
            cell = set_union(cell, p.partition().cells()[idx]);
            mass += p.mass(idx);
        }
        cells.emplace_back(std::move(cell), std::move(mass));
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw input_error("grouping does not cover all cell indices");
    return MeasuredPartition(std::move(cells));
}

std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    std::vector<std::vector<std::size_t>> current;
    auto recurse = [&](auto&& self, std::size_t next) -> void {
        if (next == n) {
            out.push_back(current);
            return;
        }
        // index loop: recursion grows and shrinks the vector underneath us
        for (std::size_t i = 0; i < current.size(); ++i) {
            current[i].push_back(next);
            self(self, next + 1);
            current[i].pop_back();
        }
        current.push_back({next});
        self(self, next + 1);
        current.pop_back();
    };
    recurse(recurse, 0);
    return out;
}

} // namespace sepsem
