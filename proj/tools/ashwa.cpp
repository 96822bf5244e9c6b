#include <CLI11.hpp>

#include <iostream>

#include "ashwa/cli/commands.hpp"

int main(int argc, char** argv)
{
    using namespace ashwa::cli;

    CLI::App app{"Two-layer committee blockchain simulator and analysis tools"};
    app.require_subcommand(1);
    ExperimentSpec spec;
    std::string config;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config, "INI configuration file")->check(CLI::ExistingFile);
        cmd->add_option("--out", spec.out_path, "CSV destination, '-' for stdout");
        cmd->add_option("--seed", seed, "Overrides the configured seed");
        cmd->add_option("--parallel", spec.parallel, "Worker threads")->check(CLI::Range(1u, 1024u));
    };
    const std::pair<const char*, const char*> commands[] = {
        {"committee-size", "Minimum secure committee size over an (alpha_A, epsilon) grid"},
        {"nic-check", "Evaluate the incentive-compatibility conditions"},
        {"delta", "Pivotal probability table"},
        {"simulate", "Run protocol sessions and write metrics and traces"},
        {"tps-sweep", "Block time and throughput per committee size"},
    };
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    spec.command = app.get_subcommands().front()->get_name();
    const auto* sub = app.get_subcommands().front();
    if (!config.empty()) spec.config_path = config;
    if (sub->count("--seed") > 0) spec.seed = seed;
    return run_command(spec, std::cerr);
}
