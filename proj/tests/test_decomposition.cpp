#include <homcount/decomposition.hpp>
#include <homcount/generators.hpp>
#include <homcount/hardness.hpp>

#include <doctest.h>

#include <random>

using namespace homcount;

namespace {

auto node_for(const DagTreeDecomposition &t, VertexId s) -> int
{
    return t.node_of(s);
}

// T with node `leaf` removed and node ids compacted.
auto without_node(const DagTreeDecomposition &t, int leaf) -> DagTreeDecomposition
{
    DagTreeDecomposition out;
    std::vector<int> remap(t.bags.size(), -1);
    for (int i = 0; i < t.node_count(); ++i)
        if (i != leaf) {
            remap[static_cast<std::size_t>(i)] = static_cast<int>(out.bags.size());
            out.bags.push_back(t.bags[static_cast<std::size_t>(i)]);
        }
    for (auto [a, b] : t.tree_edges)
        if (a != leaf && b != leaf)
            out.tree_edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
    return out;
}

} // namespace

TEST_CASE("single source gives a one-node tree")
{
    Pattern p(star_graph(3));
    // centre 0 points at all leaves
    PatternDag dag(p, 0b111);
    REQUIRE(dag.sources().size() == 1);
    auto built = build_width1_decomposition(dag);
    REQUIRE(std::holds_alternative<DagTreeDecomposition>(built));
    const auto &t = std::get<DagTreeDecomposition>(built);
    CHECK(t.node_count() == 1);
    CHECK(t.width() == 1);
    CHECK(t.tree_edges.empty());
    CHECK(validate_decomposition(dag, t));
}

TEST_CASE("every orientation of C5 decomposes with width one")
{
    Pattern c5(cycle_graph(5));
    for (const auto &dag : c5.orientations()) {
        auto built = build_width1_decomposition(dag);
        REQUIRE(std::holds_alternative<DagTreeDecomposition>(built));
        const auto &t = std::get<DagTreeDecomposition>(built);
        CHECK(validate_decomposition(dag, t));
        CHECK(t.width() == 1);
        CHECK(static_cast<std::size_t>(t.node_count()) == dag.sources().size());
    }
}

TEST_CASE("the hexagon hard orientation has no width-one decomposition")
{
    Pattern c6(cycle_graph(6));
    auto cert = hardness_certificate(c6);
    PatternDag dag(c6, cert.orientation);
    auto built = build_width1_decomposition(dag);
    REQUIRE(std::holds_alternative<DecompositionFailure>(built));
    auto blocking = std::get<DecompositionFailure>(built).blocking_subset;
    CHECK(popcount(blocking) == 3);
    CHECK((blocking & ~dag.source_mask()) == 0);

    // a path s2 - s1 - s3 puts s1 between a pair it does not cover
    DagTreeDecomposition path;
    path.bags = {VertexMask{1} << cert.sources[1], VertexMask{1} << cert.sources[0], VertexMask{1} << cert.sources[2]};
    path.tree_edges = {{0, 1}, {1, 2}};
    CHECK_FALSE(validate_decomposition(dag, path));
    // one bag with all three sources is a valid width-3 decomposition
    DagTreeDecomposition wide;
    wide.bags = {dag.source_mask()};
    CHECK(validate_decomposition(dag, wide));
    CHECK(wide.width() == 3);
}

TEST_CASE("validator rejects structural defects")
{
    Pattern c5(cycle_graph(5));
    const PatternDag *multi = nullptr;
    for (const auto &dag : c5.orientations())
        if (dag.sources().size() == 2)
            multi = &dag;
    REQUIRE(multi != nullptr);
    auto t = std::get<DagTreeDecomposition>(build_width1_decomposition(*multi));
    REQUIRE(t.node_count() == 2);

    auto missing_edge = t;
    missing_edge.tree_edges.clear();
    CHECK_FALSE(validate_decomposition(*multi, missing_edge));

    auto missing_source = t;
    missing_source.bags.pop_back();
    missing_source.tree_edges.clear();
    CHECK_FALSE(validate_decomposition(*multi, missing_source));

    auto non_source = t;
    non_source.bags[0] |= ~multi->source_mask() & ((VertexMask{1} << 5) - 1);
    CHECK_FALSE(validate_decomposition(*multi, non_source));

    auto looped = t;
    looped.tree_edges.emplace_back(0, 1);
    CHECK_FALSE(validate_decomposition(*multi, looped));
}

TEST_CASE("rooting picks the largest reachable set and separators are pairwise intersections")
{
    for (const auto &g : connected_graphs(6)) {
        Pattern p(g);
        if (p.longest_induced_cycle() > 5)
            continue;
        for (const auto &dag : p.orientations()) {
            auto t = std::get<DagTreeDecomposition>(build_width1_decomposition(dag));
            auto rooted = root_decomposition(dag, t);
            const auto root_reach = rooted.reachable[static_cast<std::size_t>(rooted.root)];
            for (int i = 0; i < t.node_count(); ++i) {
                const auto ui = static_cast<std::size_t>(i);
                CHECK(popcount(rooted.reachable[ui]) <= popcount(root_reach));
                if (i == rooted.root) {
                    CHECK(rooted.parent[ui] == -1);
                    continue;
                }
                const auto parent = static_cast<std::size_t>(rooted.parent[ui]);
                CHECK(rooted.separator[ui] == (rooted.reachable[ui] & rooted.reachable[parent]));
                CHECK((rooted.covered[ui] & ~rooted.covered[parent]) == 0);
            }
            CHECK(rooted.post_order.back() == rooted.root);
            CHECK(rooted.covered[static_cast<std::size_t>(rooted.root)] == (VertexMask{1} << dag.size()) - 1);
        }
    }
}

TEST_CASE("attaching a leaf to a covering node keeps the tree valid")
{
    std::mt19937_64 rng(23);
    int attached = 0;
    for (const auto &g : connected_graphs(6)) {
        Pattern p(g);
        if (p.longest_induced_cycle() > 5)
            continue;
        const auto &all = p.orientations();
        const auto &dag = all[rng() % all.size()];
        auto t = std::get<DagTreeDecomposition>(build_width1_decomposition(dag));
        if (t.node_count() < 3)
            continue;
        for (int leaf = 0; leaf < t.node_count(); ++leaf) {
            if (t.neighbours(leaf).size() != 1)
                continue;
            const auto s = static_cast<VertexId>(std::countr_zero(t.bags[static_cast<std::size_t>(leaf)]));
            auto rest = without_node(t, leaf);
            for (int d = 0; d < rest.node_count(); ++d) {
                const auto ds = static_cast<VertexId>(std::countr_zero(rest.bags[static_cast<std::size_t>(d)]));
                bool covers = true;
                for (auto x : dag.sources())
                    if (x != s && ! is_intersection_cover(dag, ds, x, s))
                        covers = false;
                if (! covers)
                    continue;
                auto grown = rest;
                grown.bags.push_back(VertexMask{1} << s);
                grown.tree_edges.emplace_back(d, grown.node_count() - 1);
                CHECK(validate_decomposition(dag, grown));
                ++attached;
                CHECK(node_for(grown, s) == grown.node_count() - 1);
            }
        }
    }
    CHECK(attached > 0);
}

TEST_CASE("decomposition dot output")
{
    Pattern c5(cycle_graph(5));
    const auto &dag = c5.orientations().front();
    auto t = std::get<DagTreeDecomposition>(build_width1_decomposition(dag));
    auto dot = decomposition_to_dot(dag, t, "demo");
    CHECK(dot.find("demo") != std::string::npos);
    CHECK(dot.find('}') != std::string::npos);
}
