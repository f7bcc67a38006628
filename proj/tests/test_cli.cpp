#include "sepsem/cli.hpp"

#include "sepsem/json_io.hpp"
#include "sepsem/parser.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sepsem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

/// Scratch directory with helper to drop JSON documents into files.
struct Sandbox {
    Sandbox() {
        dir = std::filesystem::temp_directory_path() /
              ("sepsem_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~Sandbox() { std::filesystem::remove_all(dir); }

    std::string file(const std::string& name, const std::string& contents) {
        auto path = (dir / name).string();
        std::ofstream(path) << contents;
        return path;
    }

    std::filesystem::path dir;
};

const char* fig1_m1 = R"({
  "shape": ["0x0", "0x1", "0x2"],
  "store": {"0x0": 8, "0x1": 3, "0x2": 4},
  "subst": {"x": "0x0", "y": "0x1"}
})";

const char* fig1_m2 = R"({
  "store": {"0": 8, "1": 3, "2": 4},
  "subst": {"x": 0, "y": 1}
})";

} // namespace

TEST_CASE("check store instances in both models") {
    Sandbox sb;
    auto m1 = sb.file("m1.json", fig1_m1);
    auto m2 = sb.file("m2.json", fig1_m2);

    Run r = cli({"check", "store-m2", "--prop", "x |-> 8 * y |-> 3", "--instance", m2});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "SAT\n");

    r = cli({"check", "store-m1", "--prop", "x |-> 8 * y |-> 3", "--instance", m1});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "SAT\n");

    r = cli({"check", "store-m1", "--prop", "x |-> 9", "--instance", m1});
    CHECK(r.code == exit_negative);
    CHECK(r.out == "UNSAT\n");

    // prop can come from a file too
    auto prop_file = sb.file("prop.txt", "x |-> 8 * y |-> 3");
    r = cli({"check", "store-m2", "--prop", prop_file, "--instance", m2});
    CHECK(r.code == exit_ok);

    // json format
    r = cli({"--format", "json", "check", "store-m2", "--prop", "x |-> 8", "--instance", m2});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "{\"verdict\":\"SAT\"}\n");
}

TEST_CASE("translate prints the model-2 image") {
    Sandbox sb;
    auto m1 = sb.file("m1.json", fig1_m1);
    Run r = cli({"--format", "json", "translate", "store", "--instance", m1});
    CHECK(r.code == exit_ok);
    Json doc = parse_json(r.out);
    CHECK(doc.at("store") == Json{{"0", 8}, {"1", 3}, {"2", 4}});
    CHECK(doc.at("subst") == Json{{"x", 0}, {"y", 1}});
}

TEST_CASE("equiv runs both models and reports agreement") {
    Sandbox sb;
    auto m1 = sb.file("m1.json", fig1_m1);
    Run r = cli({"equiv", "store", "--prop", "x |-> 8 * y |-> 3", "--instance", m1});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "model1: SAT\nmodel2: SAT\nagree: yes\n");

    r = cli({"equiv", "store", "--prop", "x |-> 9", "--instance", m1});
    CHECK(r.code == exit_ok); // both UNSAT still agree
    CHECK(r.out == "model1: UNSAT\nmodel2: UNSAT\nagree: yes\n");
}

TEST_CASE("equiv on a probabilistic instance") {
    Sandbox sb;
    auto inst = sb.file("prob.json", R"({
      "omega": ["00", "01", "10", "11"],
      "atoms": [["00"], ["01"], ["10"], ["11"]],
      "masses": ["1/4", "1/4", "1/4", "1/4"],
      "rvs": {"X": {"00": 0, "01": 0, "10": 1, "11": 1},
              "Y": {"00": 0, "01": 1, "10": 0, "11": 1}}
    })");
    Run r = cli({"equiv", "prob", "--prop", "X ~ ber(1/2) * Y ~ ber(1/2)", "--instance", inst});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "model1: SAT\nmodel2: SAT\nagree: yes\n");
}

TEST_CASE("laws subcommand") {
    Run r = cli({"laws", "partition", "--seed", "1", "--cases", "500"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "500 cases, 0 violations\n");

    r = cli({"laws", "store", "--seed", "3", "--cases", "50"});
    CHECK(r.code == exit_ok);

    r = cli({"--format", "json", "laws", "finprob", "--seed", "2", "--cases", "50"});
    CHECK(r.code == exit_ok);
    Json doc = parse_json(r.out);
    CHECK(doc.at("cases") == 50);
    CHECK(doc.at("violations").empty());
}

TEST_CASE("homogeneity subcommand reproduces the worked example") {
    Sandbox sb;
    auto surj = sb.file("p.json", R"({"map": {"w1": "v1", "w2": "v2", "w3": "v1"}})");
    auto dec = sb.file("dec.json", R"({
      "omega": ["v1", "v2"],
      "fibers": {"v1": [["0", "1/2"]], "v2": [["1/2", "1"]]}
    })");
    auto dec_prime = sb.file("decp.json", R"({
      "omega": ["w1", "w2", "w3"],
      "fibers": {"w1": [["0", "1/3"]], "w2": [["1/3", "2/3"]], "w3": [["2/3", "1"]]}
    })");
    Run r = cli({"homogeneity", "--surjection", surj, "--dec", dec, "--dec-prime", dec_prime});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "[0,1/3) -> [0,1/4)\n[1/3,2/3) -> [1/2,1)\n[2/3,1) -> [1/4,1/2)\n");
}

TEST_CASE("witness-fix subcommand") {
    Sandbox sb;
    auto a = sb.file("a.json", R"({"cells": [[["0","1/2"]], [["1/2","1"]]]})");
    auto b = sb.file("b.json", R"({"cells": [[["0","1/4"],["1/2","3/4"]], [["1/4","1/2"],["3/4","1"]]]})");
    Run r = cli({"witness-fix", "--a", a, "--b", b});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("->") != std::string::npos);

    // precondition failure: a finer than b
    auto quarters = sb.file("q.json",
                            R"({"cells": [[["0","1/4"]], [["1/4","1/2"]], [["1/2","3/4"]], [["3/4","1"]]]})");
    r = cli({"witness-fix", "--a", quarters, "--b", a});
    CHECK(r.code == exit_input);
    CHECK(r.err.find("error: input:") == 0);
}

TEST_CASE("act subcommand") {
    Sandbox sb;
    auto m2 = sb.file("m2.json", fig1_m2);
    auto perm = sb.file("perm.json", R"([[0, 1], [1, 0]])");
    Run r = cli({"--format", "json", "act", "perm", "--with", perm, "--on", m2});
    CHECK(r.code == exit_ok);
    Json doc = parse_json(r.out);
    // s . pi: value at n comes from pi(n)
    CHECK(doc.at("store") == Json{{"0", 3}, {"1", 8}, {"2", 4}});
    CHECK(doc.at("subst") == Json{{"x", 1}, {"y", 0}});

    auto prob = sb.file("prob2.json", R"({
      "partition": {"cells": [[["0","1/2"]], [["1/2","1"]]], "masses": ["1/3", "2/3"]},
      "rvs": {"X": {"0": [["0","1/2"]], "1": [["1/2","1"]]}}
    })");
    auto affine = sb.file("affine.json",
                          R"([{"src": ["0","1/2"], "dst": ["1/2","1"]},
                              {"src": ["1/2","1"], "dst": ["0","1/2"]}])");
    r = cli({"--format", "json", "act", "affine", "--with", affine, "--on", prob});
    CHECK(r.code == exit_ok);
    Json doc2 = parse_json(r.out);
    CHECK(doc2.at("partition").at("masses") == Json::array({"2/3", "1/3"}));
}

TEST_CASE("error paths and exit codes") {
    Sandbox sb;
    auto m2 = sb.file("m2.json", fig1_m2);

    // parse error in the proposition
    Run r = cli({"check", "store-m2", "--prop", "x |->", "--instance", m2});
    CHECK(r.code == exit_input);
    CHECK(r.err.find("error: parse:") == 0);

    // malformed instance file
    auto bad = sb.file("bad.json", "{不");
    r = cli({"check", "store-m2", "--prop", "true", "--instance", bad});
    CHECK(r.code == exit_input);
    CHECK(r.err.find("error: input:") == 0);

    // missing file
    r = cli({"check", "store-m2", "--prop", "true", "--instance", "/nonexistent.json"});
    CHECK(r.code == exit_input);

    // budget: 7-atom instance under a star
    std::string omega, atoms, masses, rv;
    for (int i = 0; i < 7; ++i) {
        omega += (i ? "," : "") + ("\"p" + std::to_string(i) + "\"");
        atoms += (i ? "," : "") + ("[\"p" + std::to_string(i) + "\"]");
        masses += (i ? "," : "") + std::string("\"1/7\"");
        rv += (i ? "," : "") + ("\"p" + std::to_string(i) + "\": " + std::to_string(i % 2));
    }
    auto big = sb.file("big.json", "{\"omega\": [" + omega + "], \"atoms\": [" + atoms +
                                       "], \"masses\": [" + masses + "], \"rvs\": {\"X\": {" + rv +
                                       "}, \"Y\": {" + rv + "}}}");
    r = cli({"check", "prob-m1", "--prop", "X ~ ber(4/7) * true", "--instance", big});
    CHECK(r.code == exit_budget);
    CHECK(r.err.find("error: budget:") == 0);

    // unknown subcommand
    r = cli({"frobnicate"});
    CHECK(r.code == exit_input);
}

TEST_CASE("json round trip on randomly generated instances") {
    Rng rng(72);
    for (int trial = 0; trial < 100; ++trial) {
        MeasuredPartition p = random_measured_partition(rng);
        CHECK(measured_partition_from_json(to_json(p)) == p);

        testutil::ProbInstance pi = testutil::random_prob_instance(rng);
        ProbInstanceM1 m1{pi.space, pi.subst};
        ProbInstanceM1 back = prob_m1_from_json(to_json(m1));
        CHECK(back.space == m1.space);
        CHECK(back.subst == m1.subst);

        auto [partition, steps] =
            translate_prob(pi.space, pi.subst, make_decoder(pi.space.omega()));
        ProbInstanceM2 m2{partition, steps};
        ProbInstanceM2 back2 = prob_m2_from_json(to_json(m2));
        CHECK(back2.partition == m2.partition);
        CHECK(back2.subst == m2.subst);

        PwAffine aff = testutil::random_affine(rng);
        CHECK(pw_affine_from_json(to_json(aff)) == aff);
        FinPerm perm = testutil::random_perm(rng);
        CHECK(fin_perm_from_json(to_json(perm)) == perm);
    }
}

TEST_CASE("equiv agrees end to end on random instances within budget") {
    Sandbox sb;
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        // random store instance, serialized through the real file format
        testutil::StoreInstance inst = testutil::random_store_instance(rng);
        auto path = sb.file("rand_store.json",
                            to_json(StoreInstanceM1{inst.shape, inst.store, inst.subst}).dump());
        StoreProp prop = testutil::random_store_prop(rng, inst, 1 + rng.below(3));
        Run r = cli({"equiv", "store", "--prop", print_prop(prop), "--instance", path});
        CHECK(r.code == exit_ok);
    }
    for (int trial = 0; trial < 25; ++trial) {
        testutil::ProbInstance inst = testutil::random_prob_instance(rng);
        auto path =
            sb.file("rand_prob.json", to_json(ProbInstanceM1{inst.space, inst.subst}).dump());
        ProbProp prop = testutil::random_prob_prop(rng, inst, 1 + rng.below(2));
        Run r = cli({"equiv", "prob", "--prop", print_prop(prop), "--instance", path});
        CHECK(r.code == exit_ok);
    }
}

TEST_CASE("byte-identical output for identical inputs") {
    Sandbox sb;
    auto m1 = sb.file("m1.json", fig1_m1);
    Run a = cli({"equiv", "store", "--prop", "x |-> 8 * true", "--instance", m1});
    Run b = cli({"equiv", "store", "--prop", "x |-> 8 * true", "--instance", m1});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);

    Run la = cli({"laws", "partition", "--seed", "9", "--cases", "60"});
    Run lb = cli({"laws", "partition", "--seed", "9", "--cases", "60"});
    CHECK(la.out == lb.out);
}
