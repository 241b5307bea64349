// orenil: exact verification of differential (Ore) polynomial identities
// over finite-dimensional rational algebras.

#include "orenil/errors.hpp"
#include "orenil/expr.hpp"
#include "orenil/harness.hpp"
#include "orenil/instance.hpp"
#include "orenil/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using orenil::CheckId;
using orenil::InstanceSpec;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

struct LoadedInstance {
    std::optional<InstanceSpec> instance;
    int error_code = kExitPass;
};

LoadedInstance load_or_report(const std::string &path) {
    try {
        return {orenil::load_instance(path), kExitPass};
    } catch (const orenil::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return {std::nullopt, kExitInputError};
    } catch (const orenil::Error &e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return {std::nullopt, kExitFail};
    }
}

int cmd_check(const std::string &path) {
    auto loaded = load_or_report(path);
    if (!loaded.instance)
        return loaded.error_code;
    const InstanceSpec &instance = *loaded.instance;
    std::cout << "algebra valid (dim " << instance.algebra->dim()
              << "), derivation valid";
    const auto nilindex = instance.derivation->matrix_nilpotency_index();
    if (nilindex)
        std::cout << ", locally nilpotent (matrix nilindex " << *nilindex
                  << ")\n";
    else
        std::cout << ", NOT locally nilpotent\n";
    return kExitPass;
}

int cmd_verify(const std::string &path, const std::string &lemmas,
               const std::string &json_out, bool parallel, unsigned bound) {
    auto loaded = load_or_report(path);
    if (!loaded.instance)
        return loaded.error_code;
    InstanceSpec &instance = *loaded.instance;
    if (bound > 0) {
        instance.bounds.nilpotency = bound;
        instance.bounds.power = bound;
    }

    std::vector<CheckId> selection;
    if (lemmas.empty()) {
        selection = orenil::all_check_ids();
    } else {
        std::string token;
        std::istringstream stream(lemmas);
        while (std::getline(stream, token, ',')) {
            const auto id = orenil::parse_check_id(token);
            if (!id) {
                std::cerr << "unknown suite \"" << token
                          << "\"; known: property1, lemma1, lemma3, lemma4, "
                             "lemma5, weylhom, maintheorem\n";
                return kExitInputError;
            }
            selection.push_back(*id);
        }
        if (selection.empty()) {
            std::cerr << "--lemmas selected nothing\n";
            return kExitInputError;
        }
    }

    const orenil::SuiteRun run =
        orenil::run_suites(instance, selection, parallel);
    for (const auto &outcome : run.outcomes) {
        std::cout << (outcome.report.passed() ? "[pass] " : "[FAIL] ")
                  << orenil::check_id_name(outcome.report.id) << ": "
                  << outcome.report.checks_run << " checks";
        if (!outcome.report.passed())
            std::cout << ", " << outcome.report.failures.size()
                      << " failures; first: "
                      << outcome.report.failures.front().description
                      << " (expected "
                      << outcome.report.failures.front().expected << ", got "
                      << outcome.report.failures.front().actual << ")";
        std::cout << " [" << outcome.millis << " ms]\n";
    }
    if (run.trace) {
        std::cout << "maintheorem trace: k = " << run.trace->k << ", m = "
                  << run.trace->chosen_m << ", M = " << run.trace->chosen_M
                  << ", a^" << run.trace->chosen_m << " = "
                  << run.trace->a_power.str() << "\n";
    }
    std::cout << (run.overall ? "overall: pass" : "overall: fail") << "\n";

    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "cannot write report to " << json_out << "\n";
            return kExitInputError;
        }
        out << orenil::suite_report_json(instance, run).dump(2) << "\n";
    }
    return run.overall ? kExitPass : kExitFail;
}

int cmd_mul(const std::string &path, const std::string &left,
            const std::string &right) {
    auto loaded = load_or_report(path);
    if (!loaded.instance)
        return loaded.error_code;
    const InstanceSpec &instance = *loaded.instance;
    try {
        const auto p =
            orenil::parse_ore_expr(left, instance.algebra, instance.derivation);
        const auto q = orenil::parse_ore_expr(right, instance.algebra,
                                              instance.derivation);
        std::cout << orenil::unital_str(orenil::unital_mul(p, q)) << "\n";
        return kExitPass;
    } catch (const orenil::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const orenil::NotLocallyNilpotent &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}

int cmd_generate(const std::vector<std::string> &args) {
    if (args.empty()) {
        std::cerr << "generate needs a kind: heisenberg or free-nilpotent g "
                     "N\n";
        return kExitInputError;
    }
    try {
        nlohmann::ordered_json doc;
        std::string out_path;
        if (args[0] == "heisenberg") {
            if (args.size() != 2) {
                std::cerr << "usage: orenil generate heisenberg <out.json>\n";
                return kExitInputError;
            }
            doc = orenil::generate_instance_json("heisenberg");
            out_path = args[1];
        } else if (args[0] == "free-nilpotent") {
            if (args.size() != 4) {
                std::cerr << "usage: orenil generate free-nilpotent <g> "
                             "<class> <out.json>\n";
                return kExitInputError;
            }
            doc = orenil::generate_instance_json(
                "free-nilpotent", static_cast<unsigned>(std::stoul(args[1])),
                static_cast<unsigned>(std::stoul(args[2])));
            out_path = args[3];
        } else {
            std::cerr << "unknown kind \"" << args[0]
                      << "\"; expected heisenberg or free-nilpotent\n";
            return kExitInputError;
        }
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitInputError;
        }
        out << doc.dump(2) << "\n";
        return kExitPass;
    } catch (const orenil::SizeExceeded &e) {
        std::cerr << "size cap exceeded: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact verification of differential polynomial identities "
                 "over nilpotent rational algebras"};
    app.require_subcommand(1);

    std::string path, lemmas, json_out, left, right;
    bool parallel = false;
    unsigned bound = 0;
    std::vector<std::string> generate_args;

    auto *check = app.add_subcommand(
        "check", "validate an instance file (algebra, derivation, bounds)");
    check->add_option("file", path, "instance file")->required();

    auto *verify =
        app.add_subcommand("verify", "run verification suites on an instance");
    verify->add_option("file", path, "instance file")->required();
    verify->add_option("--lemmas", lemmas,
                       "comma-separated subset: property1,lemma1,lemma3,"
                       "lemma4,lemma5,weylhom,maintheorem");
    verify->add_option("--json-out", json_out, "write the JSON report here");
    verify->add_flag("--parallel", parallel, "run suites concurrently");
    verify->add_option("--bound", bound,
                       "override the nilpotency/power search bounds");

    auto *mul = app.add_subcommand(
        "mul", "multiply two Ore expressions in the instance ring");
    mul->add_option("file", path, "instance file")->required();
    mul->add_option("left", left, "left factor")->required();
    mul->add_option("right", right, "right factor")->required();

    auto *generate = app.add_subcommand(
        "generate", "write a ready-to-run instance file "
                    "(heisenberg | free-nilpotent g N)");
    generate->add_option("args", generate_args, "kind [g N] out.json")
        ->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (check->parsed())
            return cmd_check(path);
        if (verify->parsed())
            return cmd_verify(path, lemmas, json_out, parallel, bound);
        if (mul->parsed())
            return cmd_mul(path, left, right);
        if (generate->parsed())
            return cmd_generate(generate_args);
    } catch (const orenil::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInputError;
}
