#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace homcount::cli {

enum ExitCode : int { exit_success = 0, exit_usage = 1, exit_input = 2, exit_mismatch = 3 };

struct Config {
    std::string engine = "auto";
    bool verify = false;
    bool emit_gadget = false;
    std::string dot_path;
    unsigned threads = 1;
    std::uint64_t seed = 42;
    std::vector<std::uint64_t> sizes{10'000, 100'000};
    int max_k = 8;
};

struct Outcome {
    nlohmann::ordered_json report;
    int exit_code = exit_success;
};

[[nodiscard]] auto version() -> std::string;
[[nodiscard]] auto config_json(const Config &cfg) -> nlohmann::ordered_json;

[[nodiscard]] auto run_analyze(const std::string &pattern_path, const Config &cfg) -> Outcome;
[[nodiscard]] auto run_count(const std::string &graph_path, const std::string &pattern_path, const Config &cfg)
    -> Outcome;
[[nodiscard]] auto run_reduce(const std::string &graph_path, const std::string &pattern_path, const Config &cfg)
    -> Outcome;
[[nodiscard]] auto run_bench(const Config &cfg) -> Outcome;

/// Parses "10000,1e5,100000" style lists.
[[nodiscard]] auto parse_sizes(const std::string &csv) -> std::vector<std::uint64_t>;

} // namespace homcount::cli
