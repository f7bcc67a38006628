#include "sepsem/cli.hpp"

#include "sepsem/errors.hpp"
#include "sepsem/json_io.hpp"
#include "sepsem/parser.hpp"
#include "sepsem/resource_monoid.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sepsem {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot read file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// --prop accepts either a path to a file or an inline literal.
std::string prop_text(const std::string& prop_arg) {
    if (std::filesystem::exists(prop_arg))
        return read_file(prop_arg);
    return prop_arg;
}

Json load_json(const std::string& path) {
    return parse_json(read_file(path));
}

void emit(std::ostream& out, const Json& doc, bool json_format) {
    if (json_format)
        out << doc.dump() << "\n";
    else
        out << doc.dump(2) << "\n";
}

void print_affine(std::ostream& out, const PwAffine& pi, bool json_format) {
    if (json_format) {
        emit(out, to_json(pi), true);
        return;
    }
    for (const AffinePiece& p : pi.pieces())
        out << "[" << rat_to_string(p.src_lo) << "," << rat_to_string(p.src_hi) << ") -> ["
            << rat_to_string(p.dst_lo) << "," << rat_to_string(p.dst_hi) << ")\n";
}

struct CheckArgs {
    std::string model;
    std::string prop;
    std::string instance;
};

int do_check(const CheckArgs& a, std::ostream& out, bool json_format) {
    bool sat = false;
    if (a.model == "store-m1") {
        auto inst = store_m1_from_json(load_json(a.instance));
        sat = sat_store_m1(inst.shape, inst.store, inst.subst, parse_store_prop(prop_text(a.prop)));
    } else if (a.model == "store-m2") {
        auto inst = store_m2_from_json(load_json(a.instance));
        sat = sat_store_m2(inst.store, inst.subst, parse_store_prop(prop_text(a.prop)));
    } else if (a.model == "prob-m1") {
        auto inst = prob_m1_from_json(load_json(a.instance));
        sat = sat_prob_m1(inst.space, inst.subst, parse_prob_prop(prop_text(a.prop)));
    } else {
        auto inst = prob_m2_from_json(load_json(a.instance));
        sat = sat_prob_m2(inst.partition, inst.subst, parse_prob_prop(prop_text(a.prop)));
    }
    if (json_format)
        emit(out, Json{{"verdict", sat ? "SAT" : "UNSAT"}}, true);
    else
        out << (sat ? "SAT" : "UNSAT") << "\n";
    return sat ? exit_ok : exit_negative;
}

int do_translate(const std::string& kind, const std::string& instance, std::ostream& out,
                 bool json_format) {
    if (kind == "store") {
        auto inst = store_m1_from_json(load_json(instance));
        auto [store, subst] = translate_store(inst.shape, inst.store, inst.subst);
        emit(out, to_json(StoreInstanceM2{std::move(store), std::move(subst)}), json_format);
    } else {
        auto inst = prob_m1_from_json(load_json(instance));
        auto [partition, subst] =
            translate_prob(inst.space, inst.subst, make_decoder(inst.space.omega()));
        emit(out, to_json(ProbInstanceM2{std::move(partition), std::move(subst)}), json_format);
    }
    return exit_ok;
}

int do_equiv(const std::string& kind, const std::string& prop_arg, const std::string& instance,
             std::ostream& out, bool json_format) {
    bool m1 = false, m2 = false;
    if (kind == "store") {
        StoreProp prop = parse_store_prop(prop_text(prop_arg));
        auto inst = store_m1_from_json(load_json(instance));
        m1 = sat_store_m1(inst.shape, inst.store, inst.subst, prop);
        auto [store, subst] = translate_store(inst.shape, inst.store, inst.subst);
        m2 = sat_store_m2(store, subst, prop);
    } else {
        ProbProp prop = parse_prob_prop(prop_text(prop_arg));
        auto inst = prob_m1_from_json(load_json(instance));
        m1 = sat_prob_m1(inst.space, inst.subst, prop);
        auto [partition, subst] =
            translate_prob(inst.space, inst.subst, make_decoder(inst.space.omega()));
        m2 = sat_prob_m2(partition, subst, prop);
    }
    const bool agree = m1 == m2;
    if (json_format) {
        emit(out,
             Json{{"model1", m1 ? "SAT" : "UNSAT"},
                  {"model2", m2 ? "SAT" : "UNSAT"},
                  {"agree", agree}},
             true);
    } else {
        out << "model1: " << (m1 ? "SAT" : "UNSAT") << "\n";
        out << "model2: " << (m2 ? "SAT" : "UNSAT") << "\n";
        out << "agree: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? exit_ok : exit_negative;
}

int do_laws(const std::string& instance, std::uint64_t seed, std::uint64_t cases,
            std::ostream& out, bool json_format) {
    LawReport report;
    if (instance == "store")
        report = check_laws(store_rm(), seed, cases);
    else if (instance == "partition")
        report = check_laws(partition_rm(), seed, cases);
    else
        report = check_laws(fin_prob_rm({"a", "b", "c", "d"}), seed, cases);
    if (json_format) {
        emit(out, to_json(report), true);
    } else {
        out << report.summary() << "\n";
        for (const Violation& v : report.violations)
            out << "  " << v.law << " (seed " << v.case_seed << "): " << v.detail << "\n";
    }
    return report.ok() ? exit_ok : exit_negative;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decision procedures for two models of store-based and probabilistic\n"
                 "separation logic over exact rational arithmetic.\n\n"
                 "Proposition grammar (loosest to tightest, all left-associative):\n"
                 "  prop := and (\"\\/\" and)*     conjunction layers are stratified, so\n"
                 "  and  := star (\"/\\\" star)*   mixing /\\ and \\/ needs no parentheses\n"
                 "  star := atom (\"*\" atom)*\n"
                 "  atom := \"true\" | x \"|->\" int | X \"~\" pmf | \"(\" prop \")\"\n"
                 "  pmf  := \"ber(\" rat \")\" | \"{\" int \":\" rat (\",\" int \":\" rat)* \"}\"\n"};
    app.require_subcommand(1);
    app.fallthrough(); // inheritable: --format may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Decide satisfaction in one model");
    check->add_option("model", check_args.model, "Which satisfaction relation")
        ->required()
        ->check(CLI::IsMember({"store-m1", "store-m2", "prob-m1", "prob-m2"}));
    check->add_option("--prop", check_args.prop, "Proposition (file or literal)")->required();
    check->add_option("--instance", check_args.instance, "Instance file")->required();

    std::string translate_kind, translate_instance;
    auto* translate = app.add_subcommand("translate", "Print the Model-2 image of a Model-1 "
                                                      "instance");
    translate->add_option("kind", translate_kind)
        ->required()
        ->check(CLI::IsMember({"store", "prob"}));
    translate->add_option("--instance", translate_instance, "Model-1 instance file")->required();

    std::string equiv_kind, equiv_prop, equiv_instance;
    auto* equiv = app.add_subcommand("equiv", "Check a Model-1 instance in both models; exit 0 "
                                              "iff the verdicts agree");
    equiv->add_option("kind", equiv_kind)->required()->check(CLI::IsMember({"store", "prob"}));
    equiv->add_option("--prop", equiv_prop, "Proposition (file or literal)")->required();
    equiv->add_option("--instance", equiv_instance, "Model-1 instance file")->required();

    std::string laws_instance;
    std::uint64_t laws_seed = 1, laws_cases = 500;
    auto* laws = app.add_subcommand("laws", "Run the resource-monoid law harness");
    laws->add_option("instance", laws_instance)
        ->required()
        ->check(CLI::IsMember({"store", "partition", "finprob"}));
    laws->add_option("--seed", laws_seed, "Generator seed")->capture_default_str();
    laws->add_option("--cases", laws_cases, "Number of cases")->capture_default_str();

    std::string homog_surjection, homog_dec, homog_dec_prime;
    auto* homog = app.add_subcommand("homogeneity", "Construct the automorphism making a "
                                                    "surjection commute with two decoders");
    homog->add_option("--surjection", homog_surjection, "File with {\"map\": {from: to}}")
        ->required();
    homog->add_option("--dec", homog_dec, "Decoder file for the target space")->required();
    homog->add_option("--dec-prime", homog_dec_prime, "Decoder file for the source space")
        ->required();

    std::string fix_a, fix_b;
    auto* fix = app.add_subcommand("witness-fix", "Construct an automorphism fixing partition a "
                                                  "but not partition b");
    fix->add_option("--a", fix_a, "Partition file {\"cells\": [...]}")->required();
    fix->add_option("--b", fix_b, "Partition file {\"cells\": [...]}")->required();

    std::string act_kind, act_with, act_on;
    auto* act_cmd = app.add_subcommand("act", "Apply a group element to a Model-2 instance");
    act_cmd->add_option("kind", act_kind)->required()->check(CLI::IsMember({"perm", "affine"}));
    act_cmd->add_option("--with", act_with, "Group element file")->required();
    act_cmd->add_option("--on", act_on, "Model-2 instance file")->required();

    std::vector<const char*> argv;
    argv.push_back("sepsem");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: input: " << e.what() << "\n";
        return exit_input;
    }

    const bool json_format = format == "json";
    try {
        if (*check)
            return do_check(check_args, out, json_format);
        if (*translate)
            return do_translate(translate_kind, translate_instance, out, json_format);
        if (*equiv)
            return do_equiv(equiv_kind, equiv_prop, equiv_instance, out, json_format);
        if (*laws)
            return do_laws(laws_instance, laws_seed, laws_cases, out, json_format);
        if (*homog) {
            auto surjection = string_map_from_json(load_json(homog_surjection));
            Decoder dec = decoder_from_json(load_json(homog_dec));
            Decoder dec_prime = decoder_from_json(load_json(homog_dec_prime));
            print_affine(out, homogeneity_auto(surjection, dec_prime, dec), json_format);
            return exit_ok;
        }
        if (*fix) {
            MPartition a = mpartition_from_json(load_json(fix_a));
            MPartition b = mpartition_from_json(load_json(fix_b));
            print_affine(out, correspondence_witness(a, b), json_format);
            return exit_ok;
        }
        if (*act_cmd) {
            if (act_kind == "perm") {
                FinPerm pi = fin_perm_from_json(load_json(act_with));
                auto inst = store_m2_from_json(load_json(act_on));
                emit(out, to_json(StoreInstanceM2{act(inst.store, pi), act(inst.subst, pi)}),
                     json_format);
            } else {
                PwAffine pi = pw_affine_from_json(load_json(act_with));
                auto inst = prob_m2_from_json(load_json(act_on));
                emit(out, to_json(ProbInstanceM2{act(inst.partition, pi), act(inst.subst, pi)}),
                     json_format);
            }
            return exit_ok;
        }
    } catch (const parse_error& e) {
        err << "error: parse: " << e.what() << "\n";
        return exit_input;
    } catch (const budget_error& e) {
        err << "error: budget: " << e.what() << "\n";
        return exit_budget;
    } catch (const input_error& e) {
        err << "error: input: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input; // unreachable: a subcommand is required
}

} // namespace sepsem
