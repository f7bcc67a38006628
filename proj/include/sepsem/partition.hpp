#pragma once

#include "sepsem/interval_set.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sepsem {

/// Finite measurable partition of [0,1): nonempty, pairwise disjoint
/// IntervalSet cells whose union is exactly [0,1), stored sorted by
/// leftmost endpoint. Canonical cells make a.e. partition equality plain
/// equality.
class MPartition {
public:
    explicit MPartition(std::vector<IntervalSet> cells);

    /// The one-cell partition {[0,1)}.
    static MPartition unit();

    const std::vector<IntervalSet>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    bool operator==(const MPartition&) const = default;

private:
    MPartition() = default;
    std::vector<IntervalSet> cells_;
};

/// Partition equality up to negligible symmetric differences; by canonicity
/// this is representation equality.
inline bool parteq(const MPartition& a, const MPartition& b) { return a == b; }

/// True iff every cell of a is (canonically) a union of cells of b.
bool is_coarser(const MPartition& a, const MPartition& b);

/// The partition generated by all nonempty pairwise intersections.
MPartition common_refinement(const MPartition& a, const MPartition& b);

/// Measurable partition with a rational mass per cell, masses >= 0 summing
/// to 1. Masses are aligned with the canonical (sorted) cell order.
class MeasuredPartition {
public:
    using WeightedCell = std::pair<IntervalSet, Rat>;

    explicit MeasuredPartition(std::vector<WeightedCell> weighted_cells);

    /// Single cell [0,1) with mass 1.
    static MeasuredPartition unit();

    /// Skips the mass-sum check; for deliberately broken law-harness
    /// instances only.
    static MeasuredPartition unchecked(std::vector<WeightedCell> weighted_cells);

    const MPartition& partition() const { return partition_; }
    const std::vector<Rat>& masses() const { return masses_; }
    const Rat& mass(std::size_t cell_index) const { return masses_[cell_index]; }
    std::size_t size() const { return masses_.size(); }

    bool operator==(const MeasuredPartition&) const = default;

    std::string to_string() const;

private:
    MeasuredPartition(MPartition p, std::vector<Rat> masses)
        : partition_(std::move(p)), masses_(std::move(masses)) {}

    MPartition partition_;
    std::vector<Rat> masses_;
};

/// The resource ordering: p is coarser than q and q's masses restrict to
/// p's (each p-cell carries the sum of the q-masses it contains).
bool dorder(const MeasuredPartition& p, const MeasuredPartition& q);

/// Discrete independent combination. Defined iff every disjoint cell pair
/// has zero product mass; the result's cells are the nonempty pairwise
/// intersections with product masses. nullopt means "not independently
/// combinable".
std::optional<MeasuredPartition> dicom(const MeasuredPartition& p, const MeasuredPartition& q);

/// Coarsens p along a set partition of its cell indices: cells are unioned
/// per group and masses summed. dorder(result, p) holds by construction.
/// Throws input_error on a malformed grouping.
MeasuredPartition coarsen(const MeasuredPartition& p,
                          const std::vector<std::vector<std::size_t>>& grouping);

/// All set partitions of {0..n-1}, each as a list of index groups.
/// Grows as the Bell numbers; callers budget n.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n);

} // namespace sepsem
