#include "sepsem/parser.hpp"

#include "sepsem/errors.hpp"
#include "sepsem/rng.hpp"

#include <doctest.h>

using namespace sepsem;

namespace {

StoreProp pt(const std::string& var, std::int64_t v) {
    return StoreProp::atom({var, v});
}

} // namespace

TEST_CASE("store atoms and star") {
    CHECK(parse_store_prop("x |-> 8 * y |-> 3") ==
          StoreProp::star(pt("x", 8), pt("y", 3)));
    CHECK(parse_store_prop("true") == StoreProp::top());
    CHECK(parse_store_prop("x |-> -2") == pt("x", -2));
}

TEST_CASE("prob atoms: bernoulli sugar and explicit pmfs") {
    Pmf ber_half({{0, Rat(1, 2)}, {1, Rat(1, 2)}});
    CHECK(parse_prob_prop("X ~ ber(1/2) * Y ~ ber(1/2)") ==
          ProbProp::star(ProbProp::atom({"X", ber_half}),
                         ProbProp::atom({"Y", ber_half})));
    CHECK(parse_prob_prop("X ~ {0: 1/2, 1: 1/2}") == ProbProp::atom({"X", ber_half}));
    CHECK(parse_prob_prop("X ~ {-1: 1/3, 5: 2/3}") ==
          ProbProp::atom({"X", Pmf({{-1, Rat(1, 3)}, {5, Rat(2, 3)}})}));
    CHECK(parse_prob_prop("X ~ ber(1)") == ProbProp::atom({"X", Pmf({{1, Rat(1)}})}));
    // zero-mass entries are dropped
    CHECK(parse_prob_prop("X ~ {0: 0, 1: 1}") == ProbProp::atom({"X", Pmf({{1, Rat(1)}})}));
}

TEST_CASE("precedence: * binds tighter than /\\ which binds tighter than \\/") {
    CHECK(parse_store_prop("true /\\ x |-> 1 * y |-> 2") ==
          StoreProp::conj(StoreProp::top(), StoreProp::star(pt("x", 1), pt("y", 2))));
    CHECK(parse_store_prop("true \\/ true /\\ true") ==
          StoreProp::disj(StoreProp::top(), StoreProp::conj(StoreProp::top(), StoreProp::top())));
    // left associativity
    CHECK(parse_store_prop("x |-> 1 * y |-> 2 * z |-> 3") ==
          StoreProp::star(StoreProp::star(pt("x", 1), pt("y", 2)), pt("z", 3)));
    // parentheses override
    CHECK(parse_store_prop("(true \\/ true) /\\ true") ==
          StoreProp::conj(StoreProp::disj(StoreProp::top(), StoreProp::top()), StoreProp::top()));
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_store_prop("x |-> ");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 7);
    }
    try {
        parse_store_prop("x |->\n@");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 1);
    }
    CHECK_THROWS_AS(parse_store_prop(""), parse_error);
    CHECK_THROWS_AS(parse_store_prop("true true"), parse_error);
    CHECK_THROWS_AS(parse_store_prop("(true"), parse_error);
    CHECK_THROWS_AS(parse_prob_prop("X ~ {0: 1/2, 0: 1/2}"), parse_error);
    CHECK_THROWS_AS(parse_prob_prop("X ~ {0: 1/2}"), parse_error);  // masses must sum to 1
    CHECK_THROWS_AS(parse_prob_prop("X ~ ber(3/2)"), parse_error);  // parameter outside [0,1]
    CHECK_THROWS_AS(parse_prob_prop("X ~ {0: 1/0}"), parse_error);  // zero denominator
}

TEST_CASE("kind mismatches are parse errors") {
    CHECK_THROWS_AS(parse_prob_prop("x |-> 8"), parse_error);
    CHECK_THROWS_AS(parse_store_prop("X ~ ber(1/2)"), parse_error);
    CHECK_THROWS_AS(parse_store_prop("x |-> 8 * Y ~ ber(1/2)"), parse_error);
}

namespace {

StoreProp random_store_ast(Rng& rng, std::size_t depth) {
    if (depth == 0 || rng.chance(2, 5)) {
        if (rng.chance(1, 4))
            return StoreProp::top();
        static const std::vector<std::string> vars{"x", "y", "foo", "a_1"};
        return pt(vars[rng.below(vars.size())], rng.range(-9, 9));
    }
    StoreProp l = random_store_ast(rng, depth - 1);
    StoreProp r = random_store_ast(rng, depth - 1);
    switch (rng.below(3)) {
    case 0: return StoreProp::star(l, r);
    case 1: return StoreProp::conj(l, r);
    default: return StoreProp::disj(l, r);
    }
}

ProbProp random_prob_ast(Rng& rng, std::size_t depth) {
    if (depth == 0 || rng.chance(2, 5)) {
        if (rng.chance(1, 4))
            return ProbProp::top();
        static const std::vector<std::string> vars{"X", "Y", "Flip"};
        std::uint64_t den = 1 + rng.below(6);
        Rat p(rng.below(den + 1), den);
        std::map<std::int64_t, Rat> entries;
        entries[rng.range(-3, 0)] = 1 - p;
        entries[rng.range(1, 4)] += p;
        return ProbProp::atom({vars[rng.below(vars.size())], Pmf(std::move(entries))});
    }
    ProbProp l = random_prob_ast(rng, depth - 1);
    ProbProp r = random_prob_ast(rng, depth - 1);
    switch (rng.below(3)) {
    case 0: return ProbProp::star(l, r);
    case 1: return ProbProp::conj(l, r);
    default: return ProbProp::disj(l, r);
    }
}

} // namespace

TEST_CASE("round trip: parse after print is the identity on ASTs") {
    Rng rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        StoreProp sp = random_store_ast(rng, 1 + rng.below(4));
        CHECK(parse_store_prop(print_prop(sp)) == sp);
        ProbProp pp = random_prob_ast(rng, 1 + rng.below(4));
        CHECK(parse_prob_prop(print_prop(pp)) == pp);
    }
}

TEST_CASE("printing uses minimal parentheses") {
    CHECK(print_prop(parse_store_prop("true /\\ x |-> 1 * y |-> 2")) ==
          "true /\\ x |-> 1 * y |-> 2");
    CHECK(print_prop(StoreProp::star(pt("x", 1), StoreProp::star(pt("y", 2), pt("z", 3)))) ==
          "x |-> 1 * (y |-> 2 * z |-> 3)");
    CHECK(print_prop(StoreProp::star(StoreProp::star(pt("x", 1), pt("y", 2)), pt("z", 3))) ==
          "x |-> 1 * y |-> 2 * z |-> 3");
    CHECK(print_prop(parse_prob_prop("X ~ ber(1/2)")) == "X ~ {0: 1/2, 1: 1/2}");
}
