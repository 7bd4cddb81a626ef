#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace waveatom::experiments {

/// Validated run description. `params_json` holds the experiment
/// parameters with every default filled in (canonical, sorted keys);
/// it is echoed verbatim into report.json.
struct RunConfig {
    std::string experiment;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string output_dir;
    std::string output_dir_source = "default"; ///< cli | config | env | default
    std::string params_json;
};

const std::vector<std::string>& experiment_names();

/// Experiment config with all defaults (no file needed).
RunConfig default_config(const std::string& experiment);

/// Parses and validates a JSON config file. Unknown keys and
/// out-of-range values are config errors naming the offending field.
RunConfig load_config(const std::filesystem::path& path);

/// Command-line overrides; `out` marks output_dir_source = "cli".
void apply_overrides(RunConfig& config, std::optional<std::uint64_t> seed,
                     std::optional<std::string> out, std::optional<int> threads);

struct RunResult {
    std::filesystem::path output_dir;
    std::vector<std::string> artifacts; ///< filenames written, report.json last
};

/// Executes the experiment: writes the per-experiment CSV/PGM artifacts
/// plus report.json (config echo, seed, constants, result numbers,
/// wall-clock time). Artifact bytes other than report.json depend only
/// on (config, seed), not on thread count or wall time.
RunResult run(const RunConfig& config);

} // namespace waveatom::experiments
