#include "cli.hpp"

#include <homcount/errors.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    using namespace homcount::cli;

    CLI::App app{"Exact homomorphism counting in bounded-degeneracy graphs"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    Config cfg;
    std::string graph_path, pattern_path, sizes_csv;
    auto add_max_k = [&](CLI::App *cmd) {
        cmd->add_option("--max-k", cfg.max_k, "Largest accepted pattern size")->check(CLI::Range(1, 11));
    };
    auto add_threads = [&](CLI::App *cmd) {
        cmd->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1U, 256U));
    };

    auto *analyze = app.add_subcommand("analyze", "Classify a pattern and decompose its orientations");
    analyze->add_option("pattern", pattern_path, "Pattern edge list")->required();
    analyze->add_option("--dot", cfg.dot_path, "Write decomposition / certificate DOT here");
    add_max_k(analyze);

    auto *count = app.add_subcommand("count", "Count homomorphisms from a pattern into a host");
    count->add_option("graph", graph_path, "Host edge list")->required();
    count->add_option("pattern", pattern_path, "Pattern edge list")->required();
    count->add_option("--engine", cfg.engine, "auto, dtd or brute")
        ->check(CLI::IsMember({"auto", "dtd", "brute"}));
    count->add_flag("--verify", cfg.verify, "Cross-check against an independent oracle");
    add_threads(count);
    add_max_k(count);

    auto *reduce = app.add_subcommand("reduce", "Recover a host's triangle count through a hard pattern");
    reduce->add_option("graph", graph_path, "Host edge list")->required();
    reduce->add_option("pattern", pattern_path, "Pattern edge list (longest induced cycle >= 6)")->required();
    reduce->add_flag("--emit-gadget", cfg.emit_gadget, "Include the gadget edge list in the report");
    add_threads(reduce);
    add_max_k(reduce);

    auto *bench = app.add_subcommand("bench", "Time the decomposition engine on synthetic hosts");
    bench->add_option("--sizes", sizes_csv, "Comma-separated edge counts");
    bench->add_option("--seed", cfg.seed, "Host generator seed");
    add_threads(bench);

    try {
        app.parse(argc, argv);
        if (! sizes_csv.empty())
            cfg.sizes = parse_sizes(sizes_csv);
    }
    catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }
    catch (const homcount::HomcountError &e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }

    Outcome outcome;
    try {
        if (*analyze)
            outcome = run_analyze(pattern_path, cfg);
        else if (*count)
            outcome = run_count(graph_path, pattern_path, cfg);
        else if (*reduce)
            outcome = run_reduce(graph_path, pattern_path, cfg);
        else
            outcome = run_bench(cfg);
    }
    catch (const std::exception &e) {
        std::cerr << "[homcount] internal error: " << e.what() << '\n';
        return exit_input;
    }
    std::cout << outcome.report.dump(2) << '\n';
    return outcome.exit_code;
}
