#include "sepsem/interval_set.hpp"

#include "sepsem/errors.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace sepsem;
using namespace sepsem::testutil;

namespace {

IntervalSet make(std::vector<IntervalSet::Piece> raw) {
    return IntervalSet::from_pairs(std::move(raw));
}

} // namespace

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(rat_from_string("3/4")) == "3/4");
    CHECK(rat_to_string(rat_from_string("-6/8")) == "-3/4"); // lowest terms
    CHECK(rat_to_string(rat_from_string("7")) == "7");
    CHECK(rat_from_string("2/4") == Rat(1, 2));
    CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
    CHECK_THROWS_AS(rat_from_string("a/b"), input_error);
    CHECK_THROWS_AS(rat_from_string(""), input_error);
}

TEST_CASE("construction canonicalizes overlapping input") {
    // frozen from the endpoint-sweep oracle
    IntervalSet s = make({{Rat(0), Rat(1, 2)}, {Rat(1, 4), Rat(3, 4)}});
    REQUIRE(s.pieces().size() == 1);
    CHECK(s.pieces()[0] == IntervalSet::Piece{Rat(0), Rat(3, 4)});

    CHECK(make({}).empty());
    CHECK(make({{Rat(1, 3), Rat(1, 3)}}).empty()); // degenerate pair dropped

    // adjacent pieces merge
    IntervalSet halves = make({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}});
    CHECK(halves == IntervalSet::full());
}

TEST_CASE("construction rejects bad endpoints") {
    CHECK_THROWS_AS(make({{Rat(-1, 4), Rat(1, 2)}}), input_error);
    CHECK_THROWS_AS(make({{Rat(1, 2), Rat(5, 4)}}), input_error);
    CHECK_THROWS_AS(make({{Rat(3, 4), Rat(1, 4)}}), input_error);
}

TEST_CASE("frozen operation examples") {
    IntervalSet a = make({{Rat(0), Rat(1, 2)}});
    IntervalSet b = make({{Rat(1, 4), Rat(3, 4)}});
    CHECK(set_intersect(a, b) == make({{Rat(1, 4), Rat(1, 2)}}));

    IntervalSet c = make({{Rat(0), Rat(1, 3)}, {Rat(2, 3), Rat(1)}});
    CHECK(c.complement() == make({{Rat(1, 3), Rat(2, 3)}}));

    CHECK(symm_diff(b, b).empty());
}

TEST_CASE("frozen measure examples") {
    CHECK(make({{Rat(1, 3), Rat(2, 3)}}).measure() == Rat(1, 3));
    CHECK(IntervalSet().measure() == 0);
    CHECK(make({{Rat(0), Rat(1, 2)}, {Rat(3, 4), Rat(1)}}).measure() == Rat(3, 4));
}

TEST_CASE("a.e. equality is representation equality") {
    IntervalSet a = make({{Rat(0), Rat(1, 3)}});
    CHECK(a.ae_equal(a));
    // degenerate piece dropped
    CHECK(make({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)}}).ae_equal(make({{Rat(0), Rat(1, 2)}})));
    CHECK_FALSE(make({{Rat(0), Rat(1, 2)}}).ae_equal(a));
    CHECK(symm_diff(make({{Rat(0), Rat(1, 2)}}), a).measure() == Rat(1, 6));
}

TEST_CASE("operations agree with the midpoint-grid oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        auto raw_a = random_raw_pieces(rng);
        auto raw_b = random_raw_pieces(rng);
        IntervalSet a = IntervalSet::from_pairs(raw_a);
        IntervalSet b = IntervalSet::from_pairs(raw_b);

        auto check_op = [&](const IntervalSet& result, auto op) {
            CHECK(is_canonical(result));
            CHECK(grid_oracle_agrees(raw_a, raw_b, op, result));
        };
        check_op(set_union(a, b), [](bool x, bool y) { return x || y; });
        check_op(set_intersect(a, b), [](bool x, bool y) { return x && y; });
        check_op(set_diff(a, b), [](bool x, bool y) { return x && !y; });
        check_op(symm_diff(a, b), [](bool x, bool y) { return x != y; });
        check_op(a.complement(), [](bool x, bool) { return !x; });
        check_op(a, [](bool x, bool) { return x; }); // canonicalization itself
    }
}

TEST_CASE("boolean algebra properties") {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        IntervalSet a = random_interval_set(rng);
        IntervalSet b = random_interval_set(rng);

        // inclusion-exclusion
        CHECK(set_union(a, b).measure() + set_intersect(a, b).measure() ==
              a.measure() + b.measure());

        // complement laws, as canonical equalities
        CHECK(set_union(a, a.complement()) == IntervalSet::full());
        CHECK(set_intersect(a, a.complement()).empty());

        // monotonicity of measure
        if (a.subset_of(b))
            CHECK(a.measure() <= b.measure());
        CHECK(set_intersect(a, b).measure() <= a.measure());
    }
}

TEST_CASE("canonicity: a.e.-equal raw inputs construct identical values") {
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        auto raw = random_raw_pieces(rng);
        IntervalSet reference = IntervalSet::from_pairs(raw);

        // rebuild from shuffled, split, and degenerate-padded input
        auto mutated = raw;
        std::vector<IntervalSet::Piece> extra;
        for (auto& [a, b] : mutated) {
            if (b - a > 0 && rng.coin()) {
                Rat mid = (a + b) / 2;
                extra.emplace_back(mid, b);
                b = mid;
            }
        }
        mutated.insert(mutated.end(), extra.begin(), extra.end());
        Rat pad = random_rat01(rng);
        mutated.emplace_back(pad, pad);
        rng.shuffle(mutated);
        CHECK(IntervalSet::from_pairs(mutated) == reference);
    }
}

TEST_CASE("split_proportional partitions its input") {
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        IntervalSet s = random_interval_set(rng);
        if (s.empty())
            continue;
        std::vector<Rat> parts{Rat(1, 4), Rat(1, 2), Rat(1, 4)};
        auto chunks = split_proportional(s, parts);
        REQUIRE(chunks.size() == 3);
        IntervalSet whole;
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            CHECK(chunks[i].measure() == s.measure() * parts[i]);
            CHECK(set_intersect(whole, chunks[i]).empty());
            whole = set_union(whole, chunks[i]);
        }
        CHECK(whole == s);
    }
    CHECK_THROWS_AS(split_proportional(IntervalSet(), {Rat(1)}), input_error);
    CHECK_THROWS_AS(split_proportional(IntervalSet::full(), {Rat(1, 2)}), input_error);
}
