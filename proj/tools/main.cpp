#include "waveatom/errors.hpp"
#include "waveatom/experiments.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

// subcommand name -> experiment it runs
const std::map<std::string, std::string> kSubcommands = {
    {"simulate", "double_slit_buildup"}, {"analyze", "born_deviation"},
    {"matterwave", "matterwave_sweep"},  {"spin", "spin_check"},
    {"compton", "compton_sweep"},        {"packet", "packet_widths"},
    {"xsec", "xsec"},
};

struct SubOptions {
    std::string experiment;
    std::string config_path;
    std::uint64_t seed = 0;
    std::string out;
    int threads = 1;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* threads_opt = nullptr;
    CLI::App* sub = nullptr;
};

int run_experiment(const SubOptions& opts) {
    using namespace waveatom;
    experiments::RunConfig config;
    if (!opts.config_path.empty()) {
        config = experiments::load_config(opts.config_path);
        if (config.experiment != opts.experiment) {
            throw config_error("config declares experiment '" + config.experiment +
                               "' but the subcommand runs '" + opts.experiment + "'");
        }
    } else {
        config = experiments::default_config(opts.experiment);
    }
    experiments::apply_overrides(
        config,
        opts.seed_opt->count() ? std::optional<std::uint64_t>(opts.seed) : std::nullopt,
        opts.out_opt->count() ? std::optional<std::string>(opts.out) : std::nullopt,
        opts.threads_opt->count() ? std::optional<int>(opts.threads) : std::nullopt);
    const auto result = experiments::run(config);
    std::cout << opts.experiment << ": wrote " << result.artifacts.size() << " artifact(s) to "
              << result.output_dir.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo wave-detection experiments, matter-wave and spinor density "
                 "calculators, Compton kinematics, and wave-packet width analysis"};
    app.require_subcommand(1);

    std::vector<SubOptions> all;
    all.reserve(kSubcommands.size());
    for (const auto& [name, experiment] : kSubcommands) {
        auto& o = all.emplace_back();
        o.experiment = experiment;
        o.sub = app.add_subcommand(name, "run the " + experiment + " experiment");
        o.sub->add_option("--config", o.config_path, "JSON run configuration")
            ->check(CLI::ExistingFile);
        o.seed_opt = o.sub->add_option("--seed", o.seed, "override the config seed");
        o.out_opt = o.sub->add_option("--out", o.out, "output directory");
        o.threads_opt = o.sub->add_option("--threads", o.threads, "worker thread count");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // flag/usage problems are config errors
    }

    try {
        for (const auto& o : all) {
            if (o.sub->parsed()) return run_experiment(o);
        }
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const waveatom::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
