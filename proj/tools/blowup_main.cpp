// Command-line front end: compute blow-up characteristic classes, verify the
// calculus identities on a scenario, or evaluate the Euler characteristic.
//
// Exit codes: 0 success, 1 identity-check failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blowup/scenario.hpp"

namespace {

struct CommonArgs {
    std::vector<std::string> positional;
    std::string scenario_file;
    std::string coefficients;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("preset", args.positional,
                    "M and N presets (e.g. cp:3 cp-linear:1) or: formal dimM=6 dimN=2 "
                    "[rank=..] [chern=e1,e2]");
    cmd->add_option("--scenario", args.scenario_file, "scenario JSON file");
    cmd->add_option("--coefficients", args.coefficients, "z (integers) or z2 (mod 2)")
        ->check(CLI::IsMember({"z", "z2", "integers", "mod2"}));
    cmd->add_option("--format", args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

blowup::Built build_from_args(const CommonArgs& args) {
    blowup::Scenario s;
    if (!args.scenario_file.empty()) {
        if (!args.positional.empty())
            throw blowup::ScenarioError("give either positional presets or --scenario, not both");
        std::ifstream in(args.scenario_file);
        if (!in) throw blowup::ScenarioError("cannot open " + args.scenario_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        s = blowup::parse_scenario(buffer.str());
    } else {
        s = blowup::scenario_from_positional(args.positional);
    }
    if (!args.coefficients.empty()) {
        s.mode = (args.coefficients == "z2" || args.coefficients == "mod2")
                     ? blowup::Coeff::mod2
                     : blowup::Coeff::integers;
    }
    return blowup::build_scenario(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic classes of blow-ups"};
    app.require_subcommand(1);

    CommonArgs compute_args, verify_args, euler_args;
    int max_degree = -1;
    int trials = 100;
    std::uint64_t seed = 1;

    CLI::App* compute =
        app.add_subcommand("compute", "canonical total class of the blow-up, degree by degree");
    add_common(compute, compute_args);
    compute->add_option("--max-degree", max_degree, "highest class index to print");

    CLI::App* verify = app.add_subcommand("verify", "run every identity check on the scenario");
    add_common(verify, verify_args);
    verify->add_option("--trials", trials, "random trials per check");
    verify->add_option("--seed", seed, "random seed");

    CLI::App* euler =
        app.add_subcommand("euler", "Euler characteristic of the blow-up (concrete scenarios)");
    add_common(euler, euler_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            const blowup::Built built = build_from_args(compute_args);
            const blowup::ComputeResult result = blowup::run_compute(built, max_degree);
            std::cout << (compute_args.format == "json" ? blowup::to_json(result)
                                                        : blowup::to_text(result));
            return 0;
        }
        if (verify->parsed()) {
            const blowup::Built built = build_from_args(verify_args);
            const blowup::VerifyResult result = blowup::run_verify(built, trials, seed);
            std::cout << (verify_args.format == "json" ? blowup::to_json(result)
                                                       : blowup::to_text(result));
            return result.all_pass() ? 0 : 1;
        }
        if (euler->parsed()) {
            const blowup::Built built = build_from_args(euler_args);
            std::cout << blowup::run_euler(built).str() << "\n";
            return 0;
        }
    } catch (const blowup::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
