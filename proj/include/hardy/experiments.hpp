#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hardy {

struct ExperimentOptions {
    std::optional<std::int64_t> N;
    std::optional<std::size_t> grid;
    std::uint64_t seed = 1;
    bool serial = false;
};

struct Verdict {
    std::string name;
    nlohmann::json observed;
    /// e.g. "<= 0.05" or "== (2,1,2)"
    std::string criterion;
    bool pass = false;
};

/// {experiment, claim, config_echo, checkpoints[], verdicts[], tolerances}
struct ExperimentReport {
    std::string experiment;
    std::string claim;
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json checkpoints = nlohmann::json::array();
    std::vector<Verdict> verdicts;
    nlohmann::json tolerances = nlohmann::json::object();
    /// Extra experiment-specific output.
    nlohmann::json details = nlohmann::json::object();

    bool passed() const;
    void check(const std::string& name, const nlohmann::json& observed, const std::string& criterion, bool pass);
    nlohmann::json to_json() const;
};

struct Preset {
    std::string name;
    /// CLI subcommand that accepts it.
    std::string command;
    std::string claim;
    std::function<ExperimentReport(const ExperimentOptions&)> run;
};

const std::vector<Preset>& presets();
/// DomainError for unknown names.
const Preset& find_preset(const std::string& name);

}  // namespace hardy
