// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. Pass criterion numbers as arguments to run a
// subset.

#include <homcount/generators.hpp>
#include <homcount/hardness.hpp>
#include <homcount/hom_count.hpp>
#include <homcount/reduction.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace homcount;

namespace {

// Every comparison below is exact except scaling.
constexpr double kScalingSlack = 2.0;                 // runtime ratio <= slack * size ratio
constexpr int kScalingRepeats = 3;                     // best-of timing per size
constexpr std::uint64_t kSeed = 20240601;
constexpr int kCountingHostsPerPattern = 50;
constexpr VertexId kCountingMaxHost = 30;
constexpr int kReductionHostsPerPattern = 20;
constexpr VertexId kReductionMaxHost = 12;
constexpr int kMaxSweepK = 7;
constexpr int kMaxCountingK = 6;
constexpr int kMaxUrSubset = 5;

struct Verdict {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// all connected patterns on 1..max_k vertices, computed once
auto corpus(int max_k) -> const std::vector<Pattern> &
{
    static std::vector<Pattern> patterns;
    static int built = 0;
    for (int k = built + 1; k <= max_k; ++k)
        for (auto &g : connected_graphs(static_cast<VertexId>(k)))
            patterns.emplace_back(std::move(g));
    built = std::max(built, max_k);
    return patterns;
}

auto host_for(std::mt19937_64 &rng, VertexId max_n) -> Graph
{
    static constexpr std::array<double, 5> densities{0.08, 0.15, 0.25, 0.4, 0.6};
    const auto n = static_cast<VertexId>(4 + rng() % (max_n - 3));
    const double p = densities[rng() % densities.size()];
    if (rng() % 4 == 0)
        return random_bounded_degeneracy(n, static_cast<unsigned>(1 + rng() % 4), rng());
    return random_gnp(n, p, rng());
}

auto dichotomy() -> Verdict
{
    std::size_t patterns = 0, orientations = 0, easy = 0, hard = 0, violations = 0;
    for (const auto &p : corpus(kMaxSweepK)) {
        ++patterns;
        const bool is_easy = p.longest_induced_cycle() <= 5;
        std::size_t failed = 0;
        for (const auto &dag : p.orientations()) {
            ++orientations;
            if (std::holds_alternative<DecompositionFailure>(build_width1_decomposition(dag)))
                ++failed;
        }
        if (is_easy) {
            ++easy;
            violations += failed == 0 ? 0 : 1;
        }
        else {
            ++hard;
            violations += failed > 0 ? 0 : 1;
        }
    }
    return {violations == 0,
        std::to_string(patterns) + " patterns (k <= 7), " + std::to_string(orientations) + " orientations, " +
            std::to_string(easy) + " easy all decomposed, " + std::to_string(hard) +
            " hard each with a failing orientation, " + std::to_string(violations) + " violations"};
}

template <typename Check>
auto over_counting_corpus(Check check) -> std::pair<std::size_t, std::size_t>
{
    std::mt19937_64 rng(kSeed);
    std::size_t instances = 0, mismatches = 0;
    for (const auto &p : corpus(kMaxCountingK)) {
        if (p.size() > kMaxCountingK || p.longest_induced_cycle() > 5)
            continue;
        for (int i = 0; i < kCountingHostsPerPattern; ++i) {
            auto g = host_for(rng, kCountingMaxHost);
            ++instances;
            if (! check(g, p))
                ++mismatches;
        }
    }
    return {instances, mismatches};
}

auto counting() -> Verdict
{
    auto [instances, mismatches] = over_counting_corpus([](const Graph &g, const Pattern &p) {
        return count_homs(g, p, Engine::dtd).count == count_homs(g, p, Engine::brute).count;
    });
    return {mismatches == 0 && instances > 0,
        std::to_string(instances) + " (pattern, host) pairs, dtd vs brute, " + std::to_string(mismatches) +
            " mismatches"};
}

auto orientation_sum() -> Verdict
{
    auto [instances, mismatches] = over_counting_corpus([](const Graph &g, const Pattern &p) {
        auto gdir = OrientedGraph::orient(g, degeneracy_order(g).order);
        Count sum;
        for (const auto &dag : p.orientations())
            sum += count_directed_homs_brute(gdir, dag);
        return sum == count_homs_brute(g, p);
    });
    return {mismatches == 0 && instances > 0,
        std::to_string(instances) + " pairs, sum of directed counts vs undirected brute, " +
            std::to_string(mismatches) + " mismatches"};
}

struct ReductionCase {
    std::string name;
    Graph pattern;
};

auto reduction_cases() -> std::vector<ReductionCase>
{
    return {{"C6", cycle_graph(6)}, {"C7", cycle_graph(7)}, {"C8", cycle_graph(8)},
        {"two-apex hexagon", two_apex_hexagon()}};
}

// built instances are shared with the structure check
auto reduction_instances() -> std::vector<std::pair<ReductionInstance, std::size_t>> &
{
    static std::vector<std::pair<ReductionInstance, std::size_t>> instances;
    return instances;
}

auto reduction() -> Verdict
{
    std::mt19937_64 rng(kSeed + 4);
    std::size_t runs = 0, mismatches = 0;
    std::string per_pattern;
    auto cases = reduction_cases();
    CountOptions options;
    options.brute.max_host_vertices = 0;
    for (std::size_t c = 0; c < cases.size(); ++c) {
        Pattern p(cases[c].pattern);
        auto start = Clock::now();
        for (int i = 0; i < kReductionHostsPerPattern; ++i) {
            const auto n = static_cast<VertexId>(3 + rng() % (kReductionMaxHost - 2));
            const double density = 0.2 + 0.1 * static_cast<double>(rng() % 5);
            auto g = random_gnp(n, density, rng());
            auto inst = build_gadget(g, p);
            auto recovered = count_triangles_via_reduction(inst, p, options).triangles;
            ++runs;
            if (recovered != count_triangles_direct(g))
                ++mismatches;
            reduction_instances().emplace_back(std::move(inst), c);
        }
        per_pattern += (c ? ", " : "") + cases[c].name + " " + std::to_string(static_cast<int>(seconds_since(start))) + "s";
    }

    // the one-triangle micro instance
    Pattern c6(cycle_graph(6));
    auto micro = build_gadget(complete_graph(3), c6);
    auto result = count_triangles_via_reduction(micro, c6);
    const bool micro_ok = result.partitioned_matches == Count{6} && result.triangles == Count{1};

    return {mismatches == 0 && micro_ok,
        std::to_string(runs) + " hosts (n <= 12) over C6, C7, C8, two-apex hexagon [" + per_pattern + "], " +
            std::to_string(mismatches) + " mismatches; micro instance: " + result.partitioned_matches.to_string() +
            " partitioned matches, recovered " + result.triangles.to_string()};
}

auto gadget_structure() -> Verdict
{
    auto &instances = reduction_instances();
    if (instances.empty())
        (void)reduction();
    std::size_t checked = 0, violations = 0;
    auto cases = reduction_cases();
    for (const auto &[inst, c] : instances) {
        auto check = verify_gadget_degeneracy(inst);
        ++checked;
        if (! check.ok || ! inst.within_size_bound())
            ++violations;
    }
    return {violations == 0 && checked > 0,
        std::to_string(checked) + " gadgets: degeneracy <= k-r+2 and |V| < 6ml+3n+k, " + std::to_string(violations) +
            " violations"};
}

auto unique_reachability() -> Verdict
{
    std::size_t graphs = 0, cyclic = 0, certificates = 0, bad_certificates = 0;
    for (const auto &p : corpus(kMaxSweepK)) {
        if (p.longest_induced_cycle() >= 6) {
            ++certificates;
            auto cert = hardness_certificate(p);
            PatternDag dag(p, cert.orientation);
            auto ur = unique_reachability_graph(dag, dag.source_mask());
            bool ok = verify_certificate(p, cert);
            for (int i = 0; i < 3; ++i)
                ok = ok && ur.has_edge(cert.sources[static_cast<std::size_t>(i)], cert.sources[static_cast<std::size_t>((i + 1) % 3)]);
            bad_certificates += ok ? 0 : 1;
            continue;
        }
        for (const auto &dag : p.orientations()) {
            const auto sources = dag.source_mask();
            for (VertexMask subset = sources; subset != 0; subset = (subset - 1) & sources) {
                if (popcount(subset) > kMaxUrSubset)
                    continue;
                ++graphs;
                if (! unique_reachability_graph(dag, subset).is_acyclic())
                    ++cyclic;
            }
        }
    }
    return {cyclic == 0 && bad_certificates == 0,
        std::to_string(graphs) + " UR graphs of easy patterns, " + std::to_string(cyclic) + " with a cycle; " +
            std::to_string(certificates) + " certificates, " + std::to_string(bad_certificates) + " without their triangle"};
}

auto scaling() -> Verdict
{
    const std::vector<std::size_t> sizes{10'000, 100'000, 1'000'000};
    Pattern c5(cycle_graph(5));
    auto plan = make_dtd_plan(c5);
    std::vector<double> times;
    std::vector<std::size_t> edges;
    std::string detail;
    for (auto m : sizes) {
        auto g = bench_host(m, 3, kSeed);
        auto gdir = OrientedGraph::orient(g, degeneracy_order(g).order);
        double best = 1e300;
        Count count;
        for (int rep = 0; rep < kScalingRepeats; ++rep) {
            auto start = Clock::now();
            count = count_homs_dtd(gdir, plan);
            best = std::min(best, seconds_since(start));
        }
        times.push_back(best);
        edges.push_back(g.edge_count());
        char buf[160];
        std::snprintf(buf, sizeof buf, "%sm=%zu %.3fs", detail.empty() ? "" : ", ", g.edge_count(), best);
        detail += buf;
    }
    bool pass = true;
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        const double size_ratio = static_cast<double>(edges[i]) / static_cast<double>(edges[i - 1]);
        const double time_ratio = times[i] / times[i - 1];
        char buf[160];
        std::snprintf(buf, sizeof buf, "; ratio %.2f (limit %.1f)", time_ratio, kScalingSlack * size_ratio);
        detail += buf;
        pass = pass && time_ratio <= kScalingSlack * size_ratio;
    }
    return {pass, "C5 on degeneracy-3 hosts: " + detail};
}

} // namespace

int main(int argc, char **argv)
{
    struct Criterion {
        int id;
        const char *name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "dichotomy sweep", dichotomy},
        {2, "counting correctness", counting},
        {3, "orientation-sum identity", orientation_sum},
        {4, "reduction end-to-end", reduction},
        {5, "gadget structure", gadget_structure},
        {6, "unique reachability acyclicity", unique_reachability},
        {7, "near-linear scaling", scaling},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto &c : criteria) {
        if (! selected.empty() && ! selected.count(c.id))
            continue;
        auto start = Clock::now();
        Verdict v;
        try {
            v = c.run();
        }
        catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %d %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
            seconds_since(start));
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }
    if (selected.empty() || selected.count(8))
        std::printf("N/A  8 conditional lower bound: not testable; its constructive content is criteria 4 to 6\n");
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
