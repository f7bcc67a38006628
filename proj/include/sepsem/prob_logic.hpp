#pragma once

#include "sepsem/decoder.hpp"
#include "sepsem/eval_options.hpp"
#include "sepsem/partition.hpp"
#include "sepsem/prop.hpp"
#include "sepsem/pw_affine.hpp"
#include "sepsem/rat.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sepsem {

/// Finite discrete probability space: a sample space, the atom partition of
/// an (atomic) sigma-algebra on it, and a rational mass per atom summing
/// to 1. Atoms are canonical: each sorted, atoms ordered by first point.
class FinProbSpace {
public:
    FinProbSpace(FinOmega omega, std::vector<std::vector<std::string>> atoms,
                 std::vector<Rat> masses);

    /// The minimal space {emptyset, Omega} with total mass 1.
    static FinProbSpace trivial(FinOmega omega);

    /// Singleton atoms, all with mass 1/|Omega|.
    static FinProbSpace uniform(FinOmega omega);

    const FinOmega& omega() const { return omega_; }
    const std::vector<std::vector<std::string>>& atoms() const { return atoms_; }
    const std::vector<Rat>& masses() const { return masses_; }
    std::size_t atom_count() const { return atoms_.size(); }

    bool operator==(const FinProbSpace&) const = default;

private:
    FinOmega omega_;
    std::vector<std::vector<std::string>> atoms_;
    std::vector<Rat> masses_;
};

/// Integer random variable on a finite sample space: a total map.
using RandVar = std::map<std::string, std::int64_t>;
using RandSubst = std::map<std::string, RandVar>;

/// Probability mass function with finite support; zero-mass points are
/// omitted, entries are positive and sum to 1.
class Pmf {
public:
    explicit Pmf(std::map<std::int64_t, Rat> entries);

    /// ber(p): mass p at 1 and 1-p at 0.
    static Pmf bernoulli(const Rat& p);

    const std::map<std::int64_t, Rat>& entries() const { return entries_; }
    Rat mass(std::int64_t value) const;

    bool operator==(const Pmf&) const = default;

private:
    std::map<std::int64_t, Rat> entries_;
};

/// X ~ mu
struct ProbAtom {
    std::string var;
    Pmf dist;

    bool operator==(const ProbAtom&) const = default;
};

using ProbProp = Prop<ProbAtom>;

/// Integer step function on [0,1) up to a.e. equality: canonical nonempty
/// disjoint level sets covering [0,1).
class StepFn {
public:
    explicit StepFn(std::map<std::int64_t, IntervalSet> levels);

    static StepFn constant(std::int64_t value);

    const std::map<std::int64_t, IntervalSet>& levels() const { return levels_; }
    IntervalSet level(std::int64_t value) const; // empty when absent

    bool operator==(const StepFn&) const = default;

private:
    std::map<std::int64_t, IntervalSet> levels_;
};

using StepSubst = std::map<std::string, StepFn>;

/// Pullback of a probability space along a surjection p : domain -> target
/// sample space: atoms become preimages, masses are copied. Throws
/// input_error when p is not a surjection.
FinProbSpace pullback(const std::map<std::string, std::string>& p, const FinOmega& domain,
                      const FinProbSpace& target);

/// Subspace ordering: same sample space, sub's sigma-algebra is contained
/// in super's, and super's masses restrict to sub's. Throws input_error on
/// mismatched sample spaces.
bool subspace_leq(const FinProbSpace& sub, const FinProbSpace& super);

/// Product space on the product sample space, with rectangle atoms and
/// product masses. Points are named "(x,y)".
FinProbSpace product_space(const FinProbSpace& a, const FinProbSpace& b);

/// Model-1 satisfaction. X ~ mu asks every level set of the interpreting
/// random variable to be measurable (a union of atoms) with the prescribed
/// mass; star asks for two independent coarsenings whose cells multiply,
/// each satisfying its conjunct.
bool sat_prob_m1(const FinProbSpace& space, const RandSubst& subst, const ProbProp& prop,
                 const EvalOptions& opts = {});

/// Model-2 satisfaction over measured partitions of [0,1): star asks for
/// coarsenings p, q with dicom(p,q) defined and below the ambient partition
/// in the dorder.
bool sat_prob_m2(const MeasuredPartition& partition, const StepSubst& subst, const ProbProp& prop,
                 const EvalOptions& opts = {});

/// The partition half of the Model-1 -> Model-2 translation: cells are
/// decoder preimages of the atoms, masses ride along.
MeasuredPartition to_measured_partition(const FinProbSpace& space, const Decoder& dec);

/// Full translation: the measured partition together with one step function
/// per random variable (level sets are decoder preimages of the Model-1
/// level sets).
std::pair<MeasuredPartition, StepSubst> translate_prob(const FinProbSpace& space,
                                                       const RandSubst& subst, const Decoder& dec);

/// Quotients the sample space by the common refinement of the atoms and all
/// level sets of the substitution's random variables. Satisfaction is
/// invariant under this; classes are named by their smallest member.
std::pair<FinProbSpace, RandSubst> quotient_by_usage(const FinProbSpace& space,
                                                     const RandSubst& subst);

// Right actions of the piecewise-affine group on the Model-2 side.
StepFn act(const StepFn& f, const PwAffine& pi);
StepSubst act(const StepSubst& subst, const PwAffine& pi);

} // namespace sepsem
