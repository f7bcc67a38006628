#pragma once

#include <cstddef>

namespace sepsem {

/// Enumeration budgets and semantic switches for the satisfaction deciders.
/// Exceeding a budget raises budget_error rather than silently truncating.
struct EvalOptions {
    /// Store-side star splits enumerate 3-way assignments of the defined
    /// locations; refuse above this domain size.
    std::size_t store_star_max_locations = 10;

    /// Probabilistic star witnesses enumerate pairs of set partitions of the
    /// cells (Bell-number growth); refuse above this cell count.
    std::size_t prob_star_max_cells = 6;

    /// When set, the Model-2 distribution clause requires each level set to
    /// equal a single cell a.e. (the strict reading) instead of a union of
    /// cells. Off by default: the union reading is the one that makes the
    /// two models agree.
    bool m2_dist_single_cell = false;
};

} // namespace sepsem
