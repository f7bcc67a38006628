#pragma once

#include "sepsem/decoder.hpp"
#include "sepsem/partition.hpp"
#include "sepsem/prob_logic.hpp"
#include "sepsem/rng.hpp"
#include "sepsem/store_logic.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sepsem {

struct Violation {
    std::string law;
    std::string detail;
    std::uint64_t case_seed;
};

struct LawReport {
    std::uint64_t cases = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// A resource monoid packaged for the law harness: a poset with least
/// element `unit` and a partial commutative join, plus seeded generators.
/// The generators bias toward joinable and ordered elements so the laws are
/// exercised rather than vacuous.
template <typename T>
struct RmInstance {
    RmInstance(std::string name, T unit) : name(std::move(name)), unit(std::move(unit)) {}

    std::string name;
    T unit;
    std::function<bool(const T&, const T&)> leq;
    std::function<std::optional<T>(const T&, const T&)> pjoin;
    std::function<bool(const T&, const T&)> eq;
    std::function<std::string(const T&)> show;
    std::function<T(Rng&)> gen;
    std::function<T(const T&, Rng&)> gen_below;    // some y with y "leq" x
    std::function<T(const T&, Rng&)> gen_joinable; // some y with pjoin(x,y) defined

    std::optional<T> join(const T& a, const T& b) const { return pjoin(a, b); }
};

/// Checks unit, commutativity, Kleene associativity, the partial-order
/// axioms with least element, and join monotonicity on `cases` seeded
/// random configurations. Violations are data, not errors.
template <typename T>
LawReport check_laws(const RmInstance<T>& inst, std::uint64_t seed, std::uint64_t cases);

/// Stores under disjoint union, ordered by inclusion, unit the empty store.
RmInstance<NomStore> store_rm();

/// Measured partitions under independent combination, ordered by dorder,
/// unit the one-cell partition.
RmInstance<MeasuredPartition> partition_rm();

/// Deliberately broken variant of partition_rm whose join ignores the
/// definedness condition; the harness must flag it.
RmInstance<MeasuredPartition> partition_rm_broken();

/// Finite probability spaces on a fixed sample space under the stage-Omega
/// join (common refinement of atoms with product masses, defined when
/// disjoint atom pairs have zero mass product), ordered by subspace_leq.
RmInstance<FinProbSpace> fin_prob_rm(FinOmega omega);

// generator helpers shared with the test suites
MeasuredPartition random_measured_partition(Rng& rng, std::size_t max_cells = 4);
MeasuredPartition random_coarsening(const MeasuredPartition& p, Rng& rng);
MeasuredPartition random_independent_partner(const MeasuredPartition& p, Rng& rng);
std::vector<std::vector<std::size_t>> random_grouping(std::size_t n, Rng& rng);

extern template LawReport check_laws<NomStore>(const RmInstance<NomStore>&, std::uint64_t,
                                               std::uint64_t);
extern template LawReport check_laws<MeasuredPartition>(const RmInstance<MeasuredPartition>&,
                                                        std::uint64_t, std::uint64_t);
extern template LawReport check_laws<FinProbSpace>(const RmInstance<FinProbSpace>&, std::uint64_t,
                                                   std::uint64_t);

} // namespace sepsem
