#include <homcount/errors.hpp>
#include <homcount/generators.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

namespace homcount {

auto cycle_graph(VertexId n) -> Graph
{
    if (n < 3)
        throw InvalidArgument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

auto complete_graph(VertexId n) -> Graph
{
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

auto path_graph(VertexId n) -> Graph
{
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

auto star_graph(VertexId leaves) -> Graph
{
    std::vector<Edge> edges;
    for (VertexId i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

auto bull_graph() -> Graph
{
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}};
    return Graph::from_edges(5, edges);
}

auto two_apex_hexagon() -> Graph
{
    // ids 0..7 are a1..a8
    std::vector<Edge> edges{{0, 1}};
    for (VertexId i = 2; i < 8; ++i)
        edges.emplace_back(i, i == 7 ? 2 : i + 1);
    for (VertexId apex : {0U, 1U})
        for (VertexId c : {2U, 4U, 6U})
            edges.emplace_back(apex, c);
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i)
        labels.push_back("a" + std::to_string(i));
    return Graph::from_edges(8, edges, labels);
}

auto random_gnp(VertexId n, double p, std::uint64_t seed) -> Graph
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

auto random_bounded_degeneracy(VertexId n, unsigned c, std::uint64_t seed) -> Graph
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<VertexId> picked;
    for (VertexId i = 1; i < n; ++i) {
        const auto want = std::min<VertexId>(c, i);
        picked.clear();
        if (want == i) {
            for (VertexId j = 0; j < i; ++j)
                picked.push_back(j);
        }
        else {
            std::uniform_int_distribution<VertexId> pick(0, i - 1);
            while (picked.size() < want) {
                auto j = pick(rng);
                if (std::find(picked.begin(), picked.end(), j) == picked.end())
                    picked.push_back(j);
            }
        }
        for (auto j : picked)
            edges.emplace_back(j, i);
    }
    return Graph::from_edges(n, edges);
}

auto bench_host(std::size_t target_edges, unsigned c, std::uint64_t seed) -> Graph
{
    if (c == 0)
        throw InvalidArgument("bench host needs c >= 1");
    // sum_i min(c, i) = c n - c (c + 1) / 2 once n > c
    const std::size_t offset = std::size_t{c} * (c + 1) / 2;
    if (target_edges == 0)
        return Graph::from_edges(1, {});
    auto n = static_cast<VertexId>(std::max<std::size_t>(1, (target_edges + offset) / c));
    return random_bounded_degeneracy(n, c, seed);
}

namespace {

using Code = std::uint64_t;

auto pair_bit(VertexId i, VertexId j) -> unsigned
{
    if (i > j)
        std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

// smallest adjacency code over relabelings that respect refined colours
auto canonical_code(VertexId k, const std::vector<std::uint32_t> &adj) -> Code
{
    std::vector<std::size_t> colour(k);
    for (VertexId v = 0; v < k; ++v)
        colour[v] = static_cast<std::size_t>(std::popcount(adj[v]));
    for (VertexId round = 0; round < k; ++round) {
        std::vector<std::vector<std::size_t>> signature(k);
        for (VertexId v = 0; v < k; ++v) {
            signature[v].push_back(colour[v]);
            std::vector<std::size_t> around;
            for (VertexId w = 0; w < k; ++w)
                if ((adj[v] >> w) & 1U)
                    around.push_back(colour[w]);
            std::sort(around.begin(), around.end());
            signature[v].insert(signature[v].end(), around.begin(), around.end());
        }
        std::vector<std::vector<std::size_t>> distinct = signature;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<std::size_t> refined(k);
        for (VertexId v = 0; v < k; ++v)
            refined[v] = static_cast<std::size_t>(
                std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
        const bool stable = std::set<std::size_t>(refined.begin(), refined.end()).size() ==
            std::set<std::size_t>(colour.begin(), colour.end()).size();
        colour = std::move(refined);
        if (stable)
            break;
    }

    std::map<std::size_t, std::vector<VertexId>> cells;
    for (VertexId v = 0; v < k; ++v)
        cells[colour[v]].push_back(v);
    std::vector<std::vector<VertexId>> blocks;
    for (auto &[c, members] : cells)
        blocks.push_back(members);

    Code best = ~Code{0};
    std::vector<VertexId> order;
    auto encode = [&] {
        Code code = 0;
        for (VertexId a = 0; a < k; ++a)
            for (VertexId b = a + 1; b < k; ++b)
                if ((adj[order[a]] >> order[b]) & 1U)
                    code |= Code{1} << pair_bit(a, b);
        best = std::min(best, code);
    };
    auto permute = [&](auto &self, std::size_t block) -> void {
        if (block == blocks.size()) {
            encode();
            return;
        }
        auto members = blocks[block];
        do {
            order.insert(order.end(), members.begin(), members.end());
            self(self, block + 1);
            order.resize(order.size() - members.size());
        } while (std::next_permutation(members.begin(), members.end()));
    };
    permute(permute, 0);
    return best;
}

auto decode(VertexId k, Code code) -> Graph
{
    std::vector<Edge> edges;
    for (VertexId a = 0; a < k; ++a)
        for (VertexId b = a + 1; b < k; ++b)
            if ((code >> pair_bit(a, b)) & 1U)
                edges.emplace_back(a, b);
    return Graph::from_edges(k, edges);
}

} // namespace

auto connected_graphs(VertexId k) -> std::vector<Graph>
{
    if (k == 0 || k > 8)
        throw InvalidArgument("connected_graphs supports 1 <= k <= 8");

    // every connected graph has a vertex whose removal leaves it connected
    std::set<Code> level{0};
    for (VertexId size = 2; size <= k; ++size) {
        std::set<Code> grown;
        for (auto code : level) {
            std::vector<std::uint32_t> adj(size, 0);
            for (VertexId a = 0; a + 1 < size; ++a)
                for (VertexId b = a + 1; b + 1 < size; ++b)
                    if ((code >> pair_bit(a, b)) & 1U) {
                        adj[a] |= 1U << b;
                        adj[b] |= 1U << a;
                    }
            const VertexId fresh = size - 1;
            for (std::uint32_t nbrs = 1; nbrs < (1U << fresh); ++nbrs) {
                auto ext = adj;
                ext[fresh] = nbrs;
                for (VertexId a = 0; a < fresh; ++a)
                    if ((nbrs >> a) & 1U)
                        ext[a] |= 1U << fresh;
                grown.insert(canonical_code(size, ext));
            }
        }
        level = std::move(grown);
    }

    std::vector<Graph> graphs;
    graphs.reserve(level.size());
    for (auto code : level)
        graphs.push_back(decode(k, code));
    return graphs;
}

} // namespace homcount
