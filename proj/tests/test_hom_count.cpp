#include "oracles.hpp"

#include <homcount/errors.hpp>
#include <homcount/generators.hpp>
#include <homcount/hom_count.hpp>
#include <homcount/hom_table.hpp>

#include <doctest.h>

#include <map>
#include <random>

using namespace homcount;

namespace {

auto degeneracy_dag(const Graph &g) -> OrientedGraph
{
    return OrientedGraph::orient(g, degeneracy_order(g).order);
}

auto arc_test(const OrientedGraph &gdir)
{
    return [&gdir](VertexId a, VertexId b) { return gdir.has_arc(a, b); };
}

} // namespace

TEST_CASE("engine names")
{
    CHECK(parse_engine("auto") == Engine::automatic);
    CHECK(parse_engine("dtd") == Engine::dtd);
    CHECK(parse_engine("brute") == Engine::brute);
    CHECK(engine_name(Engine::dtd) == "dtd");
    CHECK_THROWS_AS((void)parse_engine("fast"), InvalidArgument);
}

TEST_CASE("brute counts of trivial patterns")
{
    auto g = random_gnp(17, 0.3, 1);
    CHECK(count_homs_brute(g, Pattern(Graph::from_edges(1, {}))) == Count{17});
    CHECK(count_homs_brute(g, Pattern(path_graph(2))) == Count{2 * g.edge_count()});
    CHECK(count_homs_brute(Graph{}, Pattern(path_graph(2))).is_zero());
}

TEST_CASE("hexagon into a triangle gives 66")
{
    auto k3 = complete_graph(3);
    CHECK(oracle::cycle_homs(k3, 6) == 66);
    CHECK(count_homs_brute(k3, Pattern(cycle_graph(6))) == Count{66});
    CHECK(count_homs(k3, Pattern(cycle_graph(6))).count == Count{66});
}

TEST_CASE("C4 into K4 gives 84")
{
    auto k4 = complete_graph(4);
    CHECK(oracle::cycle_homs(k4, 4) == 84);
    auto result = count_homs(k4, Pattern(cycle_graph(4)), Engine::dtd);
    CHECK(result.count == Count{84});
    CHECK(count_homs_brute(k4, Pattern(cycle_graph(4))) == Count{84});
}

TEST_CASE("triangle into a bipartite host is zero")
{
    auto result = count_homs(cycle_graph(6), Pattern(complete_graph(3)));
    CHECK(result.count.is_zero());
    CHECK(result.engine_used == Engine::dtd);
}

TEST_CASE("brute counter agrees with full map enumeration")
{
    for (VertexId k = 1; k <= 5; ++k)
        for (const auto &h : connected_graphs(k)) {
            Pattern p(h);
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                auto g = random_gnp(7, 0.45, seed * 31 + k);
                CHECK(count_homs_brute(g, p) == Count{oracle::homs(g, h)});
            }
        }
}

TEST_CASE("cycle counts agree with matrix traces")
{
    for (VertexId len = 3; len <= 8; ++len) {
        Pattern p(cycle_graph(len));
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            auto g = random_gnp(20, 0.25, seed + 100 * len);
            auto expected = oracle::cycle_homs(g, static_cast<int>(len));
            CHECK(count_homs_brute(g, p).to_string() == expected.str());
            if (len <= 5)
                CHECK(count_homs(g, p, Engine::dtd).count.to_string() == expected.str());
        }
    }
}

TEST_CASE("brute limits")
{
    auto g = random_gnp(50, 0.2, 3);
    CHECK_THROWS_AS((void)count_homs_brute(g, Pattern(cycle_graph(4)), BruteLimits{40, 0}), SizeLimitError);
    CHECK_THROWS_AS((void)count_homs_brute(g, Pattern(cycle_graph(4)), BruteLimits{0, 10}), BudgetExceeded);
    CHECK_NOTHROW((void)count_homs_brute(g, Pattern(cycle_graph(4)), BruteLimits{0, 0}));
}

TEST_CASE("directed brute agrees with full map enumeration")
{
    for (const auto &h : connected_graphs(4)) {
        Pattern p(h);
        auto g = random_gnp(8, 0.5, h.edge_count());
        auto gdir = degeneracy_dag(g);
        for (const auto &dag : p.orientations())
            CHECK(count_directed_homs_brute(gdir, dag) == Count{oracle::directed_homs(8, arc_test(gdir), dag)});
    }
}

TEST_CASE("reachable enumeration")
{
    auto g = random_gnp(12, 0.3, 9);
    auto gdir = degeneracy_dag(g);

    // a lone source maps anywhere
    Pattern star(star_graph(2));
    PatternDag in_star(star, 0b00); // both leaves point at the centre
    for (auto s : in_star.sources()) {
        ReachableEnumerator e(gdir, in_star, s);
        CHECK(popcount(e.reachable()) == 2);
    }

    // a -> b into the transitive triangle
    auto tri = complete_graph(3);
    std::vector<VertexId> order{0, 1, 2};
    auto tdir = OrientedGraph::orient(tri, order);
    Pattern edge(path_graph(2));
    PatternDag ab(edge, 0b1);
    CHECK(ReachableEnumerator(tdir, ab, 0).count() == 3);
    std::size_t streamed = 0;
    enumerate_reachable_homs(tdir, ab, 0, [&](std::span<const VertexId> images) {
        CHECK(tdir.has_arc(images[0], images[1]));
        ++streamed;
    });
    CHECK(streamed == 3);
    CHECK_THROWS_AS(ReachableEnumerator(tdir, ab, 1), InvalidArgument);

    Pattern single(Graph::from_edges(1, {}));
    CHECK(ReachableEnumerator(gdir, single.orientations().front(), 0).count() == 12);
}

TEST_CASE("reachable enumeration matches directed brute force on the reachable sub-DAG")
{
    std::mt19937_64 rng(41);
    for (VertexId k = 2; k <= 5; ++k)
        for (const auto &h : connected_graphs(k)) {
            Pattern p(h);
            auto g = random_gnp(static_cast<VertexId>(8 + rng() % 8), 0.35, rng());
            auto gdir = degeneracy_dag(g);
            const auto &dag = p.orientations()[rng() % p.orientations().size()];
            for (auto s : dag.sources()) {
                const auto reach = dag.reachable(s);
                std::uint64_t expected = 0;
                const auto arcs = oracle::arcs_of(dag);
                auto members = mask_members(reach);
                oracle::for_each_map(static_cast<VertexId>(members.size()), g.vertex_count(),
                    [&](const std::vector<VertexId> &map) {
                        std::vector<VertexId> full(static_cast<std::size_t>(dag.size()));
                        for (std::size_t i = 0; i < members.size(); ++i)
                            full[members[i]] = map[i];
                        for (auto [a, b] : arcs)
                            if (((reach >> a) & 1U) && ((reach >> b) & 1U) &&
                                ! gdir.has_arc(full[static_cast<std::size_t>(a)], full[static_cast<std::size_t>(b)]))
                                return;
                        ++expected;
                    });
                CHECK(ReachableEnumerator(gdir, dag, s).count() == expected);
            }
        }
}

TEST_CASE("decomposed counts of path and C5 orientations match directed brute force")
{
    Pattern p4(path_graph(4));
    Pattern c5(cycle_graph(5));
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto g = random_bounded_degeneracy(20, 3, seed);
        auto gdir = degeneracy_dag(g);
        for (const auto *p : {&p4, &c5})
            for (const auto &dag : p->orientations()) {
                auto t = std::get<DagTreeDecomposition>(build_width1_decomposition(dag));
                CHECK(count_homs_decomposed(gdir, dag, t) == count_directed_homs_brute(gdir, dag));
            }
    }
}

TEST_CASE("single-node decomposition equals the enumeration length")
{
    Pattern star(star_graph(3));
    PatternDag out_star(star, 0b111);
    auto t = std::get<DagTreeDecomposition>(build_width1_decomposition(out_star));
    auto g = random_gnp(15, 0.3, 4);
    auto gdir = degeneracy_dag(g);
    CHECK(count_homs_decomposed(gdir, out_star, t) == Count{ReachableEnumerator(gdir, out_star, 0).count()});
}

TEST_CASE("decomposed counting rejects bad trees")
{
    Pattern c6(cycle_graph(6));
    auto cert = hardness_certificate(c6);
    PatternDag dag(c6, cert.orientation);
    DagTreeDecomposition wide;
    wide.bags = {dag.source_mask()};
    auto gdir = degeneracy_dag(complete_graph(4));
    CHECK_THROWS_AS((void)count_homs_decomposed(gdir, dag, wide), InvalidArgument);
    DagTreeDecomposition bad;
    for (auto s : dag.sources())
        bad.bags.push_back(VertexMask{1} << s);
    bad.tree_edges = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS((void)count_homs_decomposed(gdir, dag, bad), InvalidArgument);
}

TEST_CASE("table entries equal subtree-consistent extension counts")
{
    std::mt19937_64 rng(77);
    int tables_checked = 0;
    for (VertexId k = 3; k <= 5; ++k)
        for (const auto &h : connected_graphs(k)) {
            Pattern p(h);
            if (p.longest_induced_cycle() > 5)
                continue;
            auto g = random_gnp(static_cast<VertexId>(6 + rng() % 5), 0.5, rng());
            auto gdir = degeneracy_dag(g);
            for (const auto &dag : p.orientations()) {
                auto t = std::get<DagTreeDecomposition>(build_width1_decomposition(dag));
                if (t.node_count() < 2)
                    continue;
                auto rooted = root_decomposition(dag, t);
                const auto arcs = oracle::arcs_of(dag);
                (void)count_homs_decomposed(gdir, dag, t, [&](int node, const HomTable &table) {
                    const auto covered = rooted.covered[static_cast<std::size_t>(node)];
                    const auto sep = mask_members(rooted.separator[static_cast<std::size_t>(node)]);
                    auto members = mask_members(covered);
                    std::map<std::vector<VertexId>, std::uint64_t> expected;
                    oracle::for_each_map(static_cast<VertexId>(members.size()), g.vertex_count(),
                        [&](const std::vector<VertexId> &map) {
                            std::vector<VertexId> full(static_cast<std::size_t>(dag.size()));
                            for (std::size_t i = 0; i < members.size(); ++i)
                                full[members[i]] = map[i];
                            for (auto [a, b] : arcs)
                                if (((covered >> a) & 1U) && ((covered >> b) & 1U) &&
                                    ! gdir.has_arc(full[static_cast<std::size_t>(a)], full[static_cast<std::size_t>(b)]))
                                    return;
                            std::vector<VertexId> key;
                            for (auto v : sep)
                                key.push_back(full[v]);
                            ++expected[key];
                        });
                    CHECK(table.size() == expected.size());
                    for (std::size_t i = 0; i < table.size(); ++i) {
                        auto key = table.key_at(i);
                        std::vector<VertexId> k2(key.begin(), key.end());
                        CHECK(table.count_at(i) == Count{expected[k2]});
                        CHECK_FALSE(table.count_at(i).is_zero());
                    }
                    ++tables_checked;
                });
            }
        }
    CHECK(tables_checked > 0);
}

TEST_CASE("hom table")
{
    HomTable table(2);
    std::vector<VertexId> a{1, 2}, b{2, 1};
    table.add(a, Count{3});
    table.add(a, Count{4});
    table.add(b, Count{});
    CHECK(table.size() == 1);
    REQUIRE(table.find(a) != nullptr);
    CHECK(*table.find(a) == Count{7});
    CHECK(table.find(b) == nullptr);
    std::vector<VertexId> wrong{1};
    CHECK_THROWS_AS(table.add(wrong, Count{1}), InvalidArgument);

    HomTable many(3);
    for (VertexId i = 0; i < 5000; ++i) {
        std::vector<VertexId> key{i, i * 7, i % 13};
        many.add(key, Count{i + 1});
    }
    CHECK(many.size() == 5000);
    for (VertexId i = 0; i < 5000; i += 97) {
        std::vector<VertexId> key{i, i * 7, i % 13};
        CHECK(*many.find(key) == Count{i + 1});
    }

    HomTable scalar(0);
    scalar.add({}, Count{2});
    scalar.add({}, Count{5});
    CHECK(scalar.size() == 1);
    CHECK(*scalar.find({}) == Count{7});
}

TEST_CASE("dtd engine refuses hard patterns with a certificate")
{
    Pattern c6(cycle_graph(6));
    try {
        (void)count_homs(complete_graph(3), c6, Engine::dtd);
        FAIL("expected ClassificationError");
    }
    catch (const ClassificationError &e) {
        CHECK(e.licl() == 6);
        CHECK(verify_certificate(c6, e.certificate()));
    }
    auto automatic = count_homs(complete_graph(3), c6);
    CHECK(automatic.engine_used == Engine::brute);
}

TEST_CASE("threaded orientation sum equals the serial one")
{
    auto g = random_bounded_degeneracy(200, 3, 5);
    Pattern bull(bull_graph());
    CountOptions four;
    four.threads = 4;
    CHECK(count_homs(g, bull, Engine::dtd, four).count == count_homs(g, bull, Engine::dtd).count);
}

TEST_CASE("engines agree on random hosts for C5")
{
    Pattern c5(cycle_graph(5));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = random_gnp(30, 0.2, seed);
        CHECK(count_homs(g, c5, Engine::dtd).count == count_homs(g, c5, Engine::brute).count);
    }
}

TEST_CASE("vertex partitions")
{
    CHECK_NOTHROW(VertexPartition({{0, 2}, {1}}, 3));
    CHECK_THROWS_AS(VertexPartition({{0, 2}, {}}, 3), InvalidArgument);
    CHECK_THROWS_AS(VertexPartition({{0, 1}, {1, 2}}, 3), InvalidArgument);
    CHECK_THROWS_AS(VertexPartition({{0}, {1}}, 3), InvalidArgument);
    CHECK_THROWS_AS(VertexPartition({{0, 5}, {1, 2}}, 3), InvalidArgument);
    VertexPartition part({{0, 2}, {1}}, 3);
    CHECK(part.part_of(2) == 0);
    CHECK(part.size() == 2);
}

TEST_CASE("partitioned counts on a three-vertex path")
{
    auto path = path_graph(3); // a=0, b=1, c=2
    VertexPartition part({{0, 2}, {1}}, 3);
    Pattern k2(path_graph(2));
    CHECK(count_partitioned_homs(path, k2, part) == Count{4});
    CHECK(count_partitioned_matches(path, k2, part) == Count{2});
    std::vector<std::size_t> part_of{0, 1, 0};
    CHECK(oracle::partitioned_homs(path, path_graph(2), part_of, 2) == 4);
    CHECK_THROWS_AS((void)count_partitioned_homs(path, Pattern(path_graph(3)), part), InvalidArgument);
}

TEST_CASE("a part with no edges to the rest admits no partitioned homomorphism")
{
    std::vector<Edge> edges{{0, 1}};
    auto g = Graph::from_edges(3, edges);
    VertexPartition part({{0, 1}, {2}}, 3);
    CHECK(count_partitioned_homs(g, Pattern(path_graph(2)), part).is_zero());
    CHECK(count_partitioned_matches(g, Pattern(path_graph(2)), part).is_zero());
}

TEST_CASE("partitioned counts agree with direct enumeration")
{
    std::mt19937_64 rng(8);
    for (VertexId k = 2; k <= 4; ++k)
        for (const auto &h : connected_graphs(k)) {
            Pattern p(h);
            auto g = random_gnp(8, 0.5, rng());
            std::vector<std::vector<VertexId>> parts(k);
            std::vector<std::size_t> part_of(g.vertex_count());
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                part_of[v] = v < k ? v : rng() % k;
                parts[part_of[v]].push_back(v);
            }
            VertexPartition part(parts, g.vertex_count());
            auto expected = oracle::partitioned_homs(g, h, part_of, k);
            CHECK(count_partitioned_homs(g, p, part) == Count{expected});
            CHECK(count_partitioned_homs(g, p, part, Engine::brute) == Count{expected});
            CHECK(count_partitioned_homs(g, p, part) <= count_homs(g, p).count);
        }
}
