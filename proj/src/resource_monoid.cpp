#include "sepsem/resource_monoid.hpp"

#include "sepsem/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sepsem {

std::string LawReport::summary() const {
    std::ostringstream os;
    os << cases << " cases, " << violations.size() << " violations";
    return os.str();
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step, so per-case streams are decorrelated
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

template <typename T>
LawReport check_laws(const RmInstance<T>& inst, std::uint64_t seed, std::uint64_t cases) {
    LawReport report;
    report.cases = cases;
    auto blame = [&](const std::string& law, const std::string& detail, std::uint64_t case_seed) {
        report.violations.push_back({law, detail, case_seed});
    };

    for (std::uint64_t i = 0; i < cases; ++i) {
        const std::uint64_t case_seed = mix_seed(seed, i);
        Rng rng(case_seed);

        // a joinable pair half the time, otherwise independent draws
        T x = inst.gen(rng);
        T y = rng.coin() ? inst.gen_joinable(x, rng) : inst.gen(rng);
        T z = rng.coin() ? inst.gen(rng) : inst.gen_below(x, rng);

        // unit and least element
        auto ux = inst.join(inst.unit, x);
        if (!ux || !inst.eq(*ux, x))
            blame("unit", "unit . x != x for x = " + inst.show(x), case_seed);
        if (!inst.leq(inst.unit, x))
            blame("least", "unit not below " + inst.show(x), case_seed);

        // partial order
        if (!inst.leq(x, x))
            blame("reflexivity", inst.show(x), case_seed);
        {
            T below = inst.gen_below(x, rng);
            T lower = inst.gen_below(below, rng);
            if (!inst.leq(below, x))
                blame("order-gen", inst.show(below) + " not below " + inst.show(x), case_seed);
            if (!inst.leq(lower, x))
                blame("transitivity",
                      inst.show(lower) + " <= " + inst.show(below) + " <= " + inst.show(x),
                      case_seed);
            if (inst.leq(x, below) && !inst.eq(x, below))
                blame("antisymmetry", inst.show(x) + " vs " + inst.show(below), case_seed);
        }

        // commutativity (definedness and value)
        auto xy = inst.join(x, y);
        auto yx = inst.join(y, x);
        if (xy.has_value() != yx.has_value() ||
            (xy.has_value() && !inst.eq(*xy, *yx)))
            blame("commutativity", inst.show(x) + " . " + inst.show(y), case_seed);

        // Kleene associativity: definedness of (x.y).z forces definedness
        // of x.(y.z) and equality
        if (xy) {
            if (rng.coin())
                z = inst.gen_joinable(*xy, rng); // bias: make the outer join defined too
            auto xy_z = inst.join(*xy, z);
            if (xy_z) {
                auto yz = inst.join(y, z);
                auto x_yz = yz ? inst.join(x, *yz) : std::optional<T>{};
                if (!yz || !x_yz || !inst.eq(*xy_z, *x_yz))
                    blame("associativity",
                          inst.show(x) + " . " + inst.show(y) + " . " + inst.show(z), case_seed);
            }
        }

        // monotonicity: x' below x, y' below y, join(x,y) defined =>
        // join(x',y') defined and below join(x,y)
        if (xy) {
            T xb = inst.gen_below(x, rng);
            T yb = inst.gen_below(y, rng);
            auto small = inst.join(xb, yb);
            if (!small || !inst.leq(*small, *xy))
                blame("monotonicity",
                      inst.show(xb) + " . " + inst.show(yb) + " vs " + inst.show(x) + " . " +
                          inst.show(y),
                      case_seed);
        }
    }
    return report;
}

template LawReport check_laws<NomStore>(const RmInstance<NomStore>&, std::uint64_t, std::uint64_t);
template LawReport check_laws<MeasuredPartition>(const RmInstance<MeasuredPartition>&,
                                                 std::uint64_t, std::uint64_t);
template LawReport check_laws<FinProbSpace>(const RmInstance<FinProbSpace>&, std::uint64_t,
                                            std::uint64_t);

// ---------------------------------------------------------------------------
// stores

namespace {

std::string show_store(const NomStore& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [n, v] : s) {
        if (!first)
            os << ",";
        first = false;
        os << n << ":" << v;
    }
    os << "}";
    return os.str();
}

NomStore random_store(Rng& rng) {
    NomStore s;
    std::size_t n = rng.below(4);
    for (std::size_t i = 0; i < n; ++i)
        s[static_cast<Nat>(rng.below(8))] = rng.range(-2, 2);
    return s;
}

} // namespace

RmInstance<NomStore> store_rm() {
    RmInstance<NomStore> inst("store", {});
    inst.leq = [](const NomStore& a, const NomStore& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    inst.pjoin = [](const NomStore& a, const NomStore& b) -> std::optional<NomStore> {
        NomStore out = a;
        for (const auto& [n, v] : b)
            if (!out.emplace(n, v).second)
                return std::nullopt; // overlapping domains
        return out;
    };
    inst.eq = [](const NomStore& a, const NomStore& b) { return a == b; };
    inst.show = show_store;
    inst.gen = random_store;
    inst.gen_below = [](const NomStore& x, Rng& rng) {
        NomStore out;
        for (const auto& kv : x)
            if (rng.coin())
                out.insert(kv);
        return out;
    };
    inst.gen_joinable = [](const NomStore& x, Rng& rng) {
        NomStore out;
        std::size_t n = rng.below(3);
        for (std::size_t i = 0; i < n; ++i) {
            Nat loc = static_cast<Nat>(rng.below(12));
            if (!x.count(loc))
                out[loc] = rng.range(-2, 2);
        }
        return out;
    };
    return inst;
}

// ---------------------------------------------------------------------------
// measured partitions

namespace {

const std::vector<long> kDenominators = {2, 3, 4, 6, 8};

} // namespace

MeasuredPartition random_measured_partition(Rng& rng, std::size_t max_cells) {
    // random breakpoints on a small rational grid, grouped into cells that
    // need not be contiguous
    long den = kDenominators[rng.below(kDenominators.size())];
    std::vector<IntervalSet> slots;
    Rat prev = 0;
    for (long k = 1; k < den; ++k) {
        if (rng.coin()) {
            slots.push_back(IntervalSet::interval(prev, Rat(k, den)));
            prev = Rat(k, den);
        }
    }
    slots.push_back(IntervalSet::interval(prev, Rat(1)));

    std::size_t cell_count = 1 + rng.below(std::min(max_cells, slots.size()));
    std::vector<IntervalSet> cells(cell_count);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        // make sure every cell gets at least one slot
        std::size_t target = i < cell_count ? i : rng.below(cell_count);
        cells[target] = set_union(cells[target], slots[i]);
    }

    std::vector<MeasuredPartition::WeightedCell> weighted;
    std::vector<std::uint64_t> weights(cell_count);
    std::uint64_t total = 0;
    for (auto& w : weights) {
        w = rng.below(5); // zero masses happen
        total += w;
    }
    if (total == 0) {
        weights[0] = 1;
        total = 1;
    }
    for (std::size_t i = 0; i < cell_count; ++i)
        weighted.emplace_back(cells[i], Rat(weights[i], total));
    return MeasuredPartition(std::move(weighted));
}

std::vector<std::vector<std::size_t>> random_grouping(std::size_t n, Rng& rng) {
    std::size_t groups = 1 + rng.below(n);
    std::vector<std::vector<std::size_t>> grouping(groups);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t target = i < groups ? i : rng.below(groups);
        grouping[target].push_back(i);
    }
    return grouping;
}

MeasuredPartition random_coarsening(const MeasuredPartition& p, Rng& rng) {
    return coarsen(p, random_grouping(p.size(), rng));
}

MeasuredPartition random_independent_partner(const MeasuredPartition& p, Rng& rng) {
    // split every cell of p in the same proportions; the cross partition
    // combines with p by construction
    std::size_t parts = 1 + rng.below(3);
    std::vector<Rat> fractions;
    std::vector<std::uint64_t> weights(parts);
    std::uint64_t total = 0;
    for (auto& w : weights) {
        w = 1 + rng.below(4); // positive: split pieces must be nonempty
        total += w;
    }
    for (std::uint64_t w : weights)
        fractions.emplace_back(w, total);

    std::vector<std::uint64_t> mass_weights(parts);
    std::uint64_t mass_total = 0;
    for (auto& w : mass_weights) {
        w = rng.below(4);
        mass_total += w;
    }
    if (mass_total == 0) {
        mass_weights[0] = 1;
        mass_total = 1;
    }

    std::vector<MeasuredPartition::WeightedCell> weighted(parts);
    for (std::size_t j = 0; j < parts; ++j)
        weighted[j].second = Rat(mass_weights[j], mass_total);
    for (const IntervalSet& cell : p.partition().cells()) {
        auto chunks = split_proportional(cell, fractions);
        for (std::size_t j = 0; j < parts; ++j)
            weighted[j].first = set_union(weighted[j].first, chunks[j]);
    }
    return MeasuredPartition(std::move(weighted));
}

RmInstance<MeasuredPartition> partition_rm() {
    RmInstance<MeasuredPartition> inst("partition", MeasuredPartition::unit());
    inst.leq = [](const MeasuredPartition& a, const MeasuredPartition& b) { return dorder(a, b); };
    inst.pjoin = [](const MeasuredPartition& a, const MeasuredPartition& b) { return dicom(a, b); };
    inst.eq = [](const MeasuredPartition& a, const MeasuredPartition& b) { return a == b; };
    inst.show = [](const MeasuredPartition& p) { return p.to_string(); };
    inst.gen = [](Rng& rng) { return random_measured_partition(rng); };
    inst.gen_below = [](const MeasuredPartition& x, Rng& rng) { return random_coarsening(x, rng); };
    inst.gen_joinable = [](const MeasuredPartition& x, Rng& rng) {
        return random_independent_partner(x, rng);
    };
    return inst;
}

RmInstance<MeasuredPartition> partition_rm_broken() {
    RmInstance<MeasuredPartition> inst = partition_rm();
    inst.name = "partition-broken";
    // join that skips the definedness condition: it keeps the nonempty
    // intersections with product masses no matter what got dropped
    inst.pjoin = [](const MeasuredPartition& a,
                    const MeasuredPartition& b) -> std::optional<MeasuredPartition> {
        std::vector<MeasuredPartition::WeightedCell> cells;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                IntervalSet inter =
                    set_intersect(a.partition().cells()[i], b.partition().cells()[j]);
                if (!inter.empty())
                    cells.emplace_back(std::move(inter), a.mass(i) * b.mass(j));
            }
        return MeasuredPartition::unchecked(std::move(cells));
    };
    return inst;
}

// ---------------------------------------------------------------------------
// finite probability spaces on a fixed sample space

namespace {

std::string show_space(const FinProbSpace& p) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < p.atom_count(); ++i) {
        if (i)
            os << ", ";
        os << "{";
        for (std::size_t j = 0; j < p.atoms()[i].size(); ++j) {
            if (j)
                os << " ";
            os << p.atoms()[i][j];
        }
        os << "}: " << rat_to_string(p.masses()[i]);
    }
    os << "}";
    return os.str();
}

FinProbSpace space_from_labels(const FinOmega& omega, const std::vector<std::size_t>& label_of,
                               std::size_t groups, Rng& rng) {
    std::vector<std::vector<std::string>> atoms(groups);
    for (std::size_t i = 0; i < omega.size(); ++i)
        atoms[label_of[i]].push_back(omega[i]);
    std::vector<std::uint64_t> weights(groups);
    std::uint64_t total = 0;
    for (auto& w : weights) {
        w = rng.below(5);
        total += w;
    }
    if (total == 0) {
        weights[0] = 1;
        total = 1;
    }
    std::vector<Rat> masses;
    for (std::uint64_t w : weights)
        masses.emplace_back(w, total);
    return FinProbSpace(omega, std::move(atoms), std::move(masses));
}

FinProbSpace random_space(const FinOmega& omega, Rng& rng) {
    std::size_t groups = 1 + rng.below(std::min<std::size_t>(4, omega.size()));
    std::vector<std::size_t> label_of(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i)
        label_of[i] = i < groups ? i : rng.below(groups);
    rng.shuffle(label_of);
    // the shuffle may have emptied a group; relabel to the occupied ones
    std::vector<std::size_t> remap(groups, SIZE_MAX);
    std::size_t used = 0;
    for (auto& l : label_of) {
        if (remap[l] == SIZE_MAX)
            remap[l] = used++;
        l = remap[l];
    }
    return space_from_labels(omega, label_of, used, rng);
}

} // namespace

RmInstance<FinProbSpace> fin_prob_rm(FinOmega omega) {
    FinOmega sorted = make_omega(std::move(omega));
    RmInstance<FinProbSpace> inst("finprob", FinProbSpace::trivial(sorted));
    inst.leq = [](const FinProbSpace& a, const FinProbSpace& b) { return subspace_leq(a, b); };
    inst.pjoin = [](const FinProbSpace& a,
                    const FinProbSpace& b) -> std::optional<FinProbSpace> {
        if (a.omega() != b.omega())
            throw input_error("joining probability spaces on different sample spaces");
        // mirror of dicom at stage Omega: common refinement of the atoms
        // with product masses, defined when disjoint pairs have zero product
        std::vector<std::vector<std::string>> atoms;
        std::vector<Rat> masses;
        for (std::size_t i = 0; i < a.atom_count(); ++i)
            for (std::size_t j = 0; j < b.atom_count(); ++j) {
                std::vector<std::string> inter;
                std::set_intersection(a.atoms()[i].begin(), a.atoms()[i].end(),
                                      b.atoms()[j].begin(), b.atoms()[j].end(),
                                      std::back_inserter(inter));
                Rat product = a.masses()[i] * b.masses()[j];
                if (inter.empty()) {
                    if (product != 0)
                        return std::nullopt;
                } else {
                    atoms.push_back(std::move(inter));
                    masses.push_back(std::move(product));
                }
            }
        return FinProbSpace(a.omega(), std::move(atoms), std::move(masses));
    };
    inst.eq = [](const FinProbSpace& a, const FinProbSpace& b) { return a == b; };
    inst.show = show_space;
    inst.gen = [omega = sorted](Rng& rng) { return random_space(omega, rng); };
    inst.gen_below = [](const FinProbSpace& x, Rng& rng) {
        auto grouping = random_grouping(x.atom_count(), rng);
        std::vector<std::vector<std::string>> atoms;
        std::vector<Rat> masses;
        for (const auto& group : grouping) {
            std::vector<std::string> merged;
            Rat mass = 0;
            for (std::size_t idx : group) {
                merged.insert(merged.end(), x.atoms()[idx].begin(), x.atoms()[idx].end());
                mass += x.masses()[idx];
            }
            atoms.push_back(std::move(merged));
            masses.push_back(std::move(mass));
        }
        return FinProbSpace(x.omega(), std::move(atoms), std::move(masses));
    };
    inst.gen_joinable = [](const FinProbSpace& x, Rng& rng) {
        // split every atom of x the same number of ways, capped by the
        // smallest atom so all cross intersections are nonempty and the
        // join is defined
        std::size_t min_atom = SIZE_MAX;
        for (const auto& atom : x.atoms())
            min_atom = std::min(min_atom, atom.size());
        std::size_t parts = 1 + rng.below(std::min<std::size_t>(2, min_atom));
        std::vector<std::vector<std::string>> atoms(parts);
        for (const auto& atom : x.atoms())
            for (std::size_t i = 0; i < atom.size(); ++i) {
                std::size_t target = i < parts ? i : rng.below(parts);
                atoms[target].push_back(atom[i]);
            }
        std::vector<std::uint64_t> weights(atoms.size());
        std::uint64_t total = 0;
        for (auto& w : weights) {
            w = 1 + rng.below(4);
            total += w;
        }
        std::vector<Rat> masses;
        for (std::uint64_t w : weights)
            masses.emplace_back(w, total);
        return FinProbSpace(x.omega(), std::move(atoms), std::move(masses));
    };
    return inst;
}

} // namespace sepsem
