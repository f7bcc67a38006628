#include "sepsem/partition.hpp"

#include "sepsem/errors.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace sepsem;
using namespace sepsem::testutil;

namespace {

IntervalSet iv(const Rat& a, const Rat& b) {
    return IntervalSet::interval(a, b);
}

MPartition halves() {
    return MPartition({iv(Rat(0), Rat(1, 2)), iv(Rat(1, 2), Rat(1))});
}

MPartition thirds() {
    return MPartition({iv(Rat(0), Rat(1, 3)), iv(Rat(1, 3), Rat(2, 3)), iv(Rat(2, 3), Rat(1))});
}

MPartition quarters() {
    return MPartition({iv(Rat(0), Rat(1, 4)), iv(Rat(1, 4), Rat(1, 2)), iv(Rat(1, 2), Rat(3, 4)),
                       iv(Rat(3, 4), Rat(1))});
}

MeasuredPartition weighted(const MPartition& p, std::vector<Rat> masses) {
    std::vector<MeasuredPartition::WeightedCell> cells;
    for (std::size_t i = 0; i < p.size(); ++i)
        cells.emplace_back(p.cells()[i], masses[i]);
    return MeasuredPartition(std::move(cells));
}

} // namespace

TEST_CASE("partition construction validates and canonicalizes") {
    CHECK_THROWS_AS(MPartition({iv(Rat(0), Rat(1, 2))}), input_error); // gap
    CHECK_THROWS_AS(MPartition({iv(Rat(0), Rat(2, 3)), iv(Rat(1, 3), Rat(1))}),
                    input_error); // overlap
    CHECK_THROWS_AS(MPartition({IntervalSet::full(), IntervalSet()}), input_error); // empty cell

    // cells arrive unsorted, come out sorted by leftmost endpoint
    MPartition p({iv(Rat(1, 2), Rat(1)), iv(Rat(0), Rat(1, 2))});
    CHECK(p == halves());
}

TEST_CASE("parteq identifies a.e.-equal presentations") {
    // closed/open endpoint variants of the thirds partition collapse to the
    // same canonical form: [1/3,2/3] and (2/3,1] are entered as half-open
    // intervals with the same canonical representative
    MPartition closed_variant({iv(Rat(0), Rat(1, 3)), iv(Rat(1, 3), Rat(2, 3)),
                               iv(Rat(2, 3), Rat(1))});
    CHECK(parteq(thirds(), closed_variant));
    CHECK(parteq(halves(), halves()));
    CHECK_FALSE(parteq(halves(), thirds()));
}

TEST_CASE("coarseness") {
    CHECK(is_coarser(halves(), quarters()));
    CHECK(is_coarser(halves(), halves()));
    CHECK_FALSE(is_coarser(quarters(), halves()));
    CHECK(is_coarser(MPartition::unit(), thirds()));
}

TEST_CASE("common refinement") {
    CHECK(common_refinement(halves(), halves()) == halves());
    MPartition expected({iv(Rat(0), Rat(1, 3)), iv(Rat(1, 3), Rat(1, 2)), iv(Rat(1, 2), Rat(2, 3)),
                         iv(Rat(2, 3), Rat(1))});
    CHECK(common_refinement(halves(), thirds()) == expected);
    CHECK(common_refinement(thirds(), MPartition::unit()) == thirds());
}

TEST_CASE("dorder frozen examples") {
    auto p = weighted(halves(), {Rat(1, 2), Rat(1, 2)});
    auto q = weighted(quarters(), {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
    CHECK(dorder(p, p));
    CHECK(dorder(p, q));
    CHECK_FALSE(dorder(weighted(halves(), {Rat(1, 3), Rat(2, 3)}), q));
    CHECK_FALSE(dorder(q, p));
}

TEST_CASE("dicom frozen examples") {
    auto p = weighted(halves(), {Rat(1, 2), Rat(1, 2)});
    // interleaved second partition: {[0,1/4) u [1/2,3/4), [1/4,1/2) u [3/4,1)}
    MeasuredPartition q({{set_union(iv(Rat(0), Rat(1, 4)), iv(Rat(1, 2), Rat(3, 4))), Rat(1, 2)},
                         {set_union(iv(Rat(1, 4), Rat(1, 2)), iv(Rat(3, 4), Rat(1))), Rat(1, 2)}});
    auto combined = dicom(p, q);
    REQUIRE(combined.has_value());
    CHECK(combined->partition() == quarters());
    CHECK(combined->masses() ==
          std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});

    CHECK(dicom(p, MeasuredPartition::unit()) == p);

    // self-combination undefined: disjoint cells with nonzero product
    CHECK_FALSE(dicom(p, p).has_value());
}

TEST_CASE("coarsen frozen examples") {
    auto q = weighted(quarters(), {Rat(1, 8), Rat(3, 8), Rat(1, 4), Rat(1, 4)});
    auto grouped = coarsen(q, {{0, 1}, {2, 3}});
    CHECK(grouped == weighted(halves(), {Rat(1, 2), Rat(1, 2)}));
    CHECK(coarsen(q, {{0}, {1}, {2}, {3}}) == q);
    CHECK(coarsen(q, {{0, 1, 2, 3}}) == MeasuredPartition::unit());

    CHECK_THROWS_AS(coarsen(q, {{0, 1}}), input_error);
    CHECK_THROWS_AS(coarsen(q, {{0, 0}, {1, 2, 3}}), input_error);
    CHECK_THROWS_AS(coarsen(q, {{0, 1, 2, 3, 4}}), input_error);
}

TEST_CASE("coarsen results sit below the original in dorder") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_measured_partition(rng);
        auto c = random_coarsening(p, rng);
        CHECK(dorder(c, p));
    }
}

TEST_CASE("dicom unit law and commutativity") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_measured_partition(rng);
        CHECK(dicom(p, MeasuredPartition::unit()) == p);

        auto q = rng.coin() ? random_independent_partner(p, rng) : random_measured_partition(rng);
        auto pq = dicom(p, q);
        auto qp = dicom(q, p);
        CHECK(pq.has_value() == qp.has_value());
        if (pq)
            CHECK(*pq == *qp);
    }
}

TEST_CASE("dicom associativity in the Kleene sense") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_measured_partition(rng, 3);
        auto q = random_independent_partner(p, rng);
        auto pq = dicom(p, q);
        REQUIRE(pq.has_value());
        auto r = rng.coin() ? random_independent_partner(*pq, rng)
                            : random_measured_partition(rng, 3);
        auto lhs = dicom(*pq, r);
        if (!lhs)
            continue;
        auto qr = dicom(q, r);
        REQUIRE(qr.has_value());
        auto rhs = dicom(p, *qr);
        REQUIRE(rhs.has_value());
        CHECK(*lhs == *rhs);
    }
}

TEST_CASE("dicom monotonicity under coarsening") {
    Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        auto p_big = random_measured_partition(rng, 3);
        auto q_big = random_independent_partner(p_big, rng);
        REQUIRE(dicom(p_big, q_big).has_value());
        auto p = random_coarsening(p_big, rng);
        auto q = random_coarsening(q_big, rng);
        auto small = dicom(p, q);
        REQUIRE(small.has_value());
        CHECK(dorder(*small, *dicom(p_big, q_big)));
    }
}

TEST_CASE("dorder is a partial order with least element the unit") {
    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_measured_partition(rng);
        CHECK(dorder(p, p));
        CHECK(dorder(MeasuredPartition::unit(), p));

        auto c = random_coarsening(p, rng);
        auto cc = random_coarsening(c, rng);
        CHECK(dorder(cc, p)); // transitivity along generated chains
        if (dorder(p, c))
            CHECK(p == c); // antisymmetry
    }
}

TEST_CASE("dicom uniqueness against a brute-force candidate enumeration") {
    // any measured partition on the refinement cells that satisfies the
    // definition's clauses must be dicom(p, q) itself
    Rng rng(16);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_measured_partition(rng, 3);
        auto q = random_independent_partner(p, rng);
        auto combined = dicom(p, q);
        REQUIRE(combined.has_value());

        const MPartition refinement = common_refinement(p.partition(), q.partition());
        const std::size_t n = refinement.size();

        // masses on a 1/4 grid, plus the exact product masses
        std::vector<std::vector<Rat>> candidates;
        std::vector<Rat> stack;
        auto enumerate = [&](auto&& self, Rat left) -> void {
            if (stack.size() == n) {
                if (left == 0)
                    candidates.push_back(stack);
                return;
            }
            for (int k = 0; Rat(k, 4) <= left; ++k) {
                stack.push_back(Rat(k, 4));
                self(self, left - Rat(k, 4));
                stack.pop_back();
            }
        };
        if (n <= 6)
            enumerate(enumerate, Rat(1));
        candidates.push_back(combined->masses());

        int satisfying = 0;
        for (const auto& masses : candidates) {
            std::vector<MeasuredPartition::WeightedCell> cells;
            for (std::size_t i = 0; i < n; ++i)
                cells.emplace_back(refinement.cells()[i], masses[i]);
            MeasuredPartition candidate(std::move(cells));

            // the two defining clauses
            bool product_clause = true;
            for (std::size_t i = 0; i < p.size() && product_clause; ++i)
                for (std::size_t j = 0; j < q.size() && product_clause; ++j) {
                    IntervalSet inter =
                        set_intersect(p.partition().cells()[i], q.partition().cells()[j]);
                    Rat mass = 0;
                    for (std::size_t c = 0; c < candidate.size(); ++c)
                        if (candidate.partition().cells()[c].subset_of(inter))
                            mass += candidate.mass(c);
                    if (mass != p.mass(i) * q.mass(j))
                        product_clause = false;
                }
            if (product_clause) {
                ++satisfying;
                CHECK(candidate == *combined);
            }
        }
        CHECK(satisfying >= 1);
    }
}
