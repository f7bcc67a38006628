#include "sepsem/prob_logic.hpp"

#include "sepsem/errors.hpp"

#include <algorithm>

namespace sepsem {

FinProbSpace::FinProbSpace(FinOmega omega, std::vector<std::vector<std::string>> atoms,
                           std::vector<Rat> masses)
    : omega_(make_omega(std::move(omega))), atoms_(std::move(atoms)), masses_(std::move(masses)) {
    if (omega_.size() > 64)
        throw input_error("sample spaces are limited to 64 points");
    if (atoms_.size() != masses_.size())
        throw input_error("atom and mass counts differ");

    // canonicalize: sort each atom, then pair atoms with masses and sort by
    // first point
    std::vector<std::pair<std::vector<std::string>, Rat>> paired;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].empty())
            throw input_error("empty atom");
        std::sort(atoms_[i].begin(), atoms_[i].end());
        paired.emplace_back(std::move(atoms_[i]), std::move(masses_[i]));
    }
    std::sort(paired.begin(), paired.end());
    for (std::size_t i = 0; i < paired.size(); ++i) {
        atoms_[i] = std::move(paired[i].first);
        masses_[i] = std::move(paired[i].second);
    }

    std::size_t covered = 0;
    std::set<std::string> seen;
    Rat total = 0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        for (const std::string& point : atoms_[i]) {
            if (!std::binary_search(omega_.begin(), omega_.end(), point))
                throw input_error("atom contains unknown point " + point);
            if (!seen.insert(point).second)
                throw input_error("atoms overlap at point " + point);
            ++covered;
        }
        if (masses_[i] < 0)
            throw input_error("negative atom mass");
        total += masses_[i];
    }
    if (covered != omega_.size())
        throw input_error("atoms do not cover the sample space");
    if (total != 1)
        throw input_error("atom masses must sum to 1, got " + rat_to_string(total));
}

FinProbSpace FinProbSpace::trivial(FinOmega omega) {
    std::vector<std::vector<std::string>> atoms{omega};
    return FinProbSpace(std::move(omega), std::move(atoms), {Rat(1)});
}

FinProbSpace FinProbSpace::uniform(FinOmega omega) {
    std::vector<std::vector<std::string>> atoms;
    std::vector<Rat> masses;
    const Rat each = Rat(1) / Rat(static_cast<long>(omega.size()));
    for (const std::string& point : omega) {
        atoms.push_back({point});
        masses.push_back(each);
    }
    return FinProbSpace(std::move(omega), std::move(atoms), std::move(masses));
}

Pmf::Pmf(std::map<std::int64_t, Rat> entries) : entries_(std::move(entries)) {
    Rat total = 0;
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->second < 0)
            throw input_error("negative probability mass");
        if (it->second == 0) {
            it = entries_.erase(it); // zero-mass points are omitted
            continue;
        }
        total += it->second;
        ++it;
    }
    if (total != 1)
        throw input_error("probability masses must sum to 1, got " + rat_to_string(total));
}

Pmf Pmf::bernoulli(const Rat& p) {
    if (p < 0 || p > 1)
        throw input_error("bernoulli parameter outside [0,1]");
    std::map<std::int64_t, Rat> entries;
    entries[0] = 1 - p;
    entries[1] = p;
    return Pmf(std::move(entries));
}

Rat Pmf::mass(std::int64_t value) const {
    auto it = entries_.find(value);
    return it == entries_.end() ? Rat(0) : it->second;
}

StepFn::StepFn(std::map<std::int64_t, IntervalSet> levels) : levels_(std::move(levels)) {
    IntervalSet all;
    Rat total = 0;
    for (const auto& [value, level] : levels_) {
        if (level.empty())
            throw input_error("step function with a negligible level set at " +
                              std::to_string(value));
        all = set_union(all, level);
        total += level.measure();
    }
    if (all != IntervalSet::full() || total != 1)
        throw input_error("step function level sets do not partition [0,1)");
}

StepFn StepFn::constant(std::int64_t value) {
    std::map<std::int64_t, IntervalSet> levels;
    levels[value] = IntervalSet::full();
    return StepFn(std::move(levels));
}

IntervalSet StepFn::level(std::int64_t value) const {
    auto it = levels_.find(value);
    return it == levels_.end() ? IntervalSet() : it->second;
}

FinProbSpace pullback(const std::map<std::string, std::string>& p, const FinOmega& domain,
                      const FinProbSpace& target) {
    FinOmega dom = make_omega(domain);
    for (const std::string& point : dom) {
        auto it = p.find(point);
        if (it == p.end())
            throw input_error("pullback map undefined on point " + point);
        if (!std::binary_search(target.omega().begin(), target.omega().end(), it->second))
            throw input_error("pullback map hits unknown point " + it->second);
    }
    std::set<std::string> hit;
    for (const std::string& point : dom)
        hit.insert(p.at(point));
    if (hit.size() != target.omega().size())
        throw input_error("pullback map is not surjective");

    std::vector<std::vector<std::string>> atoms(target.atom_count());
    for (const std::string& point : dom) {
        const std::string& image = p.at(point);
        for (std::size_t i = 0; i < target.atom_count(); ++i)
            if (std::binary_search(target.atoms()[i].begin(), target.atoms()[i].end(), image)) {
                atoms[i].push_back(point);
                break;
            }
    }
    return FinProbSpace(std::move(dom), std::move(atoms), target.masses());
}

bool subspace_leq(const FinProbSpace& sub, const FinProbSpace& super) {
    if (sub.omega() != super.omega())
        throw input_error("subspace comparison across different sample spaces");
    for (std::size_t i = 0; i < sub.atom_count(); ++i) {
        const auto& coarse = sub.atoms()[i];
        Rat mass = 0;
        std::size_t covered = 0;
        for (std::size_t j = 0; j < super.atom_count(); ++j) {
            const auto& fine = super.atoms()[j];
            if (std::includes(coarse.begin(), coarse.end(), fine.begin(), fine.end())) {
                mass += super.masses()[j];
                covered += fine.size();
            }
        }
        if (covered != coarse.size() || mass != sub.masses()[i])
            return false;
    }
    return true;
}

FinProbSpace product_space(const FinProbSpace& a, const FinProbSpace& b) {
    auto pair_name = [](const std::string& x, const std::string& y) {
        return "(" + x + "," + y + ")";
    };
    FinOmega omega;
    for (const std::string& x : a.omega())
        for (const std::string& y : b.omega())
            omega.push_back(pair_name(x, y));
    std::vector<std::vector<std::string>> atoms;
    std::vector<Rat> masses;
    for (std::size_t i = 0; i < a.atom_count(); ++i)
        for (std::size_t j = 0; j < b.atom_count(); ++j) {
            std::vector<std::string> rect;
            for (const std::string& x : a.atoms()[i])
                for (const std::string& y : b.atoms()[j])
                    rect.push_back(pair_name(x, y));
            atoms.push_back(std::move(rect));
            masses.push_back(a.masses()[i] * b.masses()[j]);
        }
    return FinProbSpace(std::move(omega), std::move(atoms), std::move(masses));
}

namespace {

using Mask = std::uint64_t;

// ---------------------------------------------------------------------------
// Model 1: spaces in the star recursion are coarsenings of the root space,
// represented as point bitmasks over the root sample space with summed
// masses.

struct SpaceView {
    std::vector<Mask> cells; // sorted, for canonical memo keys
    std::vector<Rat> masses;
};

class ProbEvalM1 {
public:
    ProbEvalM1(const FinProbSpace& space, const RandSubst& subst, const EvalOptions& opts)
        : opts_(opts) {
        for (std::size_t i = 0; i < space.omega().size(); ++i)
            point_index_[space.omega()[i]] = i;

        for (const auto& [var, rv] : subst) {
            if (rv.size() != space.omega().size())
                throw input_error("random variable " + var + " is not total on the sample space");
            std::map<std::int64_t, Mask> levels;
            for (const auto& [point, value] : rv) {
                auto it = point_index_.find(point);
                if (it == point_index_.end())
                    throw input_error("random variable " + var + " defined on unknown point " +
                                      point);
                levels[value] |= Mask(1) << it->second;
            }
            level_masks_[var] = std::move(levels);
        }

        root_.masses = space.masses();
        for (const auto& atom : space.atoms()) {
            Mask m = 0;
            for (const std::string& point : atom)
                m |= Mask(1) << point_index_.at(point);
            root_.cells.push_back(m);
        }
    }

    bool sat(const ProbProp& prop) {
        for (const std::string& var : prop.free_vars())
            if (!level_masks_.count(var))
                throw input_error("random substitution undefined on variable " + var);
        return sat(prop, root_);
    }

private:
    static Rat mass_of(const SpaceView& sp, Mask set) {
        Rat total = 0;
        for (std::size_t i = 0; i < sp.cells.size(); ++i)
            if ((sp.cells[i] & set) == sp.cells[i])
                total += sp.masses[i];
        return total;
    }

    // set is measurable iff no cell straddles its boundary
    static bool measurable(const SpaceView& sp, Mask set) {
        for (Mask cell : sp.cells) {
            Mask inter = cell & set;
            if (inter != 0 && inter != cell)
                return false;
        }
        return true;
    }

    bool sat_dist(const SpaceView& sp, const ProbAtom& atom) {
        const auto& levels = level_masks_.at(atom.var);
        // values to check: every value the variable takes plus the support
        std::set<std::int64_t> values;
        for (const auto& [v, _] : levels)
            values.insert(v);
        for (const auto& [v, _] : atom.dist.entries())
            values.insert(v);
        for (std::int64_t v : values) {
            auto it = levels.find(v);
            Mask level = it == levels.end() ? 0 : it->second;
            if (level == 0) {
                if (atom.dist.mass(v) != 0)
                    return false;
            } else {
                if (!measurable(sp, level) || mass_of(sp, level) != atom.dist.mass(v))
                    return false;
            }
        }
        return true;
    }

    bool sat(const ProbProp& prop, const SpaceView& sp) {
        using Kind = ProbProp::Kind;
        switch (prop.kind()) {
        case Kind::top: return true;
        case Kind::atom: return sat_dist(sp, prop.get_atom());
        case Kind::conj: return sat(prop.lhs(), sp) && sat(prop.rhs(), sp);
        case Kind::disj: return sat(prop.lhs(), sp) || sat(prop.rhs(), sp);
        case Kind::star: break;
        }

        if (sp.cells.size() > opts_.prob_star_max_cells)
            throw budget_error("star witness enumeration over " +
                               std::to_string(sp.cells.size()) + " cells exceeds the budget of " +
                               std::to_string(opts_.prob_star_max_cells));

        auto key = std::make_pair(prop.id(), sp.cells);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        const auto groupings = set_partitions(sp.cells.size());
        bool found = false;
        for (const auto& g1 : groupings) {
            SpaceView left = coarsen_view(sp, g1);
            if (!sat(prop.lhs(), left))
                continue;
            for (const auto& g2 : groupings) {
                SpaceView right = coarsen_view(sp, g2);
                if (!independent(sp, left, right))
                    continue;
                if (sat(prop.rhs(), right)) {
                    found = true;
                    break;
                }
            }
            if (found)
                break;
        }
        memo_[key] = found;
        return found;
    }

    static SpaceView coarsen_view(const SpaceView& sp, const std::vector<std::vector<std::size_t>>& grouping) {
        SpaceView out;
        for (const auto& group : grouping) {
            Mask m = 0;
            Rat mass = 0;
            for (std::size_t idx : group) {
                m |= sp.cells[idx];
                mass += sp.masses[idx];
            }
            out.cells.push_back(m);
            out.masses.push_back(std::move(mass));
        }
        // keep cells sorted so memo keys are canonical
        std::vector<std::size_t> order(out.cells.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return out.cells[x] < out.cells[y]; });
        SpaceView sorted;
        for (std::size_t i : order) {
            sorted.cells.push_back(out.cells[i]);
            sorted.masses.push_back(out.masses[i]);
        }
        return sorted;
    }

    // independence of the two coarsenings inside the ambient space: every
    // pairwise intersection carries the product of the marginal masses
    static bool independent(const SpaceView& ambient, const SpaceView& left,
                            const SpaceView& right) {
        for (std::size_t i = 0; i < left.cells.size(); ++i)
            for (std::size_t j = 0; j < right.cells.size(); ++j)
                if (mass_of(ambient, left.cells[i] & right.cells[j]) !=
                    left.masses[i] * right.masses[j])
                    return false;
        return true;
    }

    std::map<std::string, std::size_t> point_index_;
    std::map<std::string, std::map<std::int64_t, Mask>> level_masks_;
    SpaceView root_;
    EvalOptions opts_;
    std::map<std::pair<const void*, std::vector<Mask>>, bool> memo_;
};

// ---------------------------------------------------------------------------
// Model 2: the recursion ranges over coarsenings of the root measured
// partition, handled with the partitions module's coarsen/dicom/dorder on
// real interval sets. Memo keys are cell-index masks relative to the root.

class ProbEvalM2 {
public:
    ProbEvalM2(const MeasuredPartition& root, const StepSubst& subst, const EvalOptions& opts)
        : root_(root), subst_(subst), opts_(opts) {}

    bool sat(const ProbProp& prop) {
        for (const std::string& var : prop.free_vars())
            if (!subst_.count(var))
                throw input_error("random substitution undefined on variable " + var);
        std::vector<std::vector<std::size_t>> identity;
        for (std::size_t i = 0; i < root_.size(); ++i)
            identity.push_back({i});
        return sat(prop, root_, grouping_masks(identity));
    }

private:
    bool sat_dist(const MeasuredPartition& part, const ProbAtom& atom) {
        const StepFn& f = subst_.at(atom.var);
        std::set<std::int64_t> values;
        for (const auto& [v, _] : f.levels())
            values.insert(v);
        for (const auto& [v, _] : atom.dist.entries())
            values.insert(v);
        for (std::int64_t v : values) {
            IntervalSet level = f.level(v);
            if (level.empty()) {
                if (atom.dist.mass(v) != 0)
                    return false;
            } else if (opts_.m2_dist_single_cell) {
                // strict reading: the level set must be a single cell a.e.
                bool ok = false;
                for (std::size_t i = 0; i < part.size(); ++i)
                    if (part.partition().cells()[i] == level) {
                        ok = part.mass(i) == atom.dist.mass(v);
                        break;
                    }
                if (!ok)
                    return false;
            } else {
                // measurability reading: a union of cells with the right mass
                IntervalSet covered;
                Rat mass = 0;
                for (std::size_t i = 0; i < part.size(); ++i)
                    if (part.partition().cells()[i].subset_of(level)) {
                        covered = set_union(covered, part.partition().cells()[i]);
                        mass += part.mass(i);
                    }
                if (covered != level || mass != atom.dist.mass(v))
                    return false;
            }
        }
        return true;
    }

    static std::vector<Mask> grouping_masks(const std::vector<std::vector<std::size_t>>& grouping) {
        std::vector<Mask> masks;
        for (const auto& group : grouping) {
            Mask m = 0;
            for (std::size_t idx : group)
                m |= Mask(1) << idx;
            masks.push_back(m);
        }
        std::sort(masks.begin(), masks.end());
        return masks;
    }

    // compose a grouping of the current cells with the current cells'
    // root-index masks, yielding root-index masks for the coarsened cells
    static std::vector<Mask> compose_masks(const std::vector<Mask>& current,
                                           const std::vector<std::vector<std::size_t>>& grouping) {
        std::vector<Mask> out;
        for (const auto& group : grouping) {
            Mask m = 0;
            for (std::size_t idx : group)
                m |= current[idx];
            out.push_back(m);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool sat(const ProbProp& prop, const MeasuredPartition& part, const std::vector<Mask>& key_masks) {
        using Kind = ProbProp::Kind;
        switch (prop.kind()) {
        case Kind::top: return true;
        case Kind::atom: return sat_dist(part, prop.get_atom());
        case Kind::conj: return sat(prop.lhs(), part, key_masks) && sat(prop.rhs(), part, key_masks);
        case Kind::disj: return sat(prop.lhs(), part, key_masks) || sat(prop.rhs(), part, key_masks);
        case Kind::star: break;
        }

        if (part.size() > opts_.prob_star_max_cells)
            throw budget_error("star witness enumeration over " + std::to_string(part.size()) +
                               " cells exceeds the budget of " +
                               std::to_string(opts_.prob_star_max_cells));

        auto key = std::make_pair(prop.id(), key_masks);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        // the key masks are sorted while the partition's cells are in
        // canonical cell order; rebuild the alignment for composing keys
        std::vector<Mask> aligned = aligned_masks(part);

        const auto groupings = set_partitions(part.size());
        bool found = false;
        for (const auto& g1 : groupings) {
            MeasuredPartition left = coarsen(part, g1);
            if (!sat(prop.lhs(), left, compose_masks(aligned, g1)))
                continue;
            for (const auto& g2 : groupings) {
                MeasuredPartition right = coarsen(part, g2);
                auto combined = dicom(left, right);
                if (!combined || !dorder(*combined, part))
                    continue;
                if (sat(prop.rhs(), right, compose_masks(aligned, g2))) {
                    found = true;
                    break;
                }
            }
            if (found)
                break;
        }
        memo_[key] = found;
        return found;
    }

    // root-index mask of each cell of part, in part's cell order
    std::vector<Mask> aligned_masks(const MeasuredPartition& part) {
        std::vector<Mask> out;
        for (const IntervalSet& cell : part.partition().cells()) {
            Mask m = 0;
            for (std::size_t i = 0; i < root_.size(); ++i)
                if (root_.partition().cells()[i].subset_of(cell))
                    m |= Mask(1) << i;
            out.push_back(m);
        }
        return out;
    }

    const MeasuredPartition& root_;
    const StepSubst& subst_;
    EvalOptions opts_;
    std::map<std::pair<const void*, std::vector<Mask>>, bool> memo_;
};

} // namespace

bool sat_prob_m1(const FinProbSpace& space, const RandSubst& subst, const ProbProp& prop,
                 const EvalOptions& opts) {
    return ProbEvalM1(space, subst, opts).sat(prop);
}

bool sat_prob_m2(const MeasuredPartition& partition, const StepSubst& subst, const ProbProp& prop,
                 const EvalOptions& opts) {
    if (partition.size() > 64)
        throw budget_error("measured partitions are limited to 64 cells here");
    return ProbEvalM2(partition, subst, opts).sat(prop);
}

MeasuredPartition to_measured_partition(const FinProbSpace& space, const Decoder& dec) {
    if (dec.omega() != space.omega())
        throw input_error("decoder is for a different sample space");
    std::vector<MeasuredPartition::WeightedCell> cells;
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        IntervalSet cell;
        for (const std::string& point : space.atoms()[i])
            cell = set_union(cell, dec.fiber(point));
        cells.emplace_back(std::move(cell), space.masses()[i]);
    }
    return MeasuredPartition(std::move(cells));
}

std::pair<MeasuredPartition, StepSubst> translate_prob(const FinProbSpace& space,
                                                       const RandSubst& subst, const Decoder& dec) {
    MeasuredPartition part = to_measured_partition(space, dec);
    StepSubst out;
    for (const auto& [var, rv] : subst) {
        if (rv.size() != space.omega().size())
            throw input_error("random variable " + var + " is not total on the sample space");
        std::map<std::int64_t, IntervalSet> levels;
        for (const auto& [point, value] : rv) {
            if (!std::binary_search(space.omega().begin(), space.omega().end(), point))
                throw input_error("random variable " + var + " defined on unknown point " + point);
            levels[value] = set_union(levels[value], dec.fiber(point));
        }
        out.emplace(var, StepFn(std::move(levels)));
    }
    return {std::move(part), std::move(out)};
}

std::pair<FinProbSpace, RandSubst> quotient_by_usage(const FinProbSpace& space,
                                                     const RandSubst& subst) {
    // two points collapse iff they share an atom and every random variable
    // agrees on them
    auto signature = [&](const std::string& point) {
        std::vector<std::int64_t> sig;
        for (std::size_t i = 0; i < space.atom_count(); ++i)
            if (std::binary_search(space.atoms()[i].begin(), space.atoms()[i].end(), point)) {
                sig.push_back(static_cast<std::int64_t>(i));
                break;
            }
        for (const auto& [_, rv] : subst)
            sig.push_back(rv.at(point));
        return sig;
    };

    std::map<std::vector<std::int64_t>, std::string> representative;
    std::map<std::string, std::string> collapse;
    for (const std::string& point : space.omega()) {
        auto sig = signature(point);
        auto [it, fresh] = representative.emplace(sig, point);
        collapse[point] = it->second; // smallest point wins: omega is sorted
        (void)fresh;
    }

    FinOmega classes;
    for (const auto& [_, rep] : representative)
        classes.push_back(rep);
    classes = make_omega(std::move(classes));

    std::vector<std::vector<std::string>> atoms(space.atom_count());
    for (const std::string& cls : classes)
        for (std::size_t i = 0; i < space.atom_count(); ++i)
            if (std::binary_search(space.atoms()[i].begin(), space.atoms()[i].end(), cls)) {
                atoms[i].push_back(cls);
                break;
            }
    FinProbSpace quotient(classes, std::move(atoms), space.masses());

    RandSubst reduced;
    for (const auto& [var, rv] : subst) {
        RandVar r;
        for (const std::string& cls : classes)
            r[cls] = rv.at(cls);
        reduced.emplace(var, std::move(r));
    }
    return {std::move(quotient), std::move(reduced)};
}

StepFn act(const StepFn& f, const PwAffine& pi) {
    std::map<std::int64_t, IntervalSet> levels;
    for (const auto& [value, level] : f.levels())
        levels[value] = pi.preimage(level);
    return StepFn(std::move(levels));
}

StepSubst act(const StepSubst& subst, const PwAffine& pi) {
    StepSubst out;
    for (const auto& [var, f] : subst)
        out.emplace(var, act(f, pi));
    return out;
}

} // namespace sepsem
