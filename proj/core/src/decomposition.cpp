#include <homcount/decomposition.hpp>
#include <homcount/errors.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace homcount {

auto DagTreeDecomposition::width() const -> int
{
    int w = 0;
    for (auto b : bags)
        w = std::max(w, popcount(b));
    return w;
}

auto DagTreeDecomposition::neighbours(int node) const -> std::vector<int>
{
    std::vector<int> result;
    for (auto [a, b] : tree_edges) {
        if (a == node)
            result.push_back(b);
        else if (b == node)
            result.push_back(a);
    }
    std::sort(result.begin(), result.end());
    return result;
}

auto DagTreeDecomposition::node_of(VertexId source) const -> int
{
    for (int i = 0; i < node_count(); ++i)
        if (bags[static_cast<std::size_t>(i)] == (VertexMask{1} << source))
            return i;
    return -1;
}

namespace {

// A width-1 partial decomposition keyed by source id: adjacency[s] is the
// set of sources whose singleton bags are tree-adjacent to {s}.
using PartialTree = std::array<VertexMask, kMaxPatternSize>;

class Width1Builder {
public:
    explicit Width1Builder(const PatternDag &dag) : dag_(dag) {}

    auto build(VertexMask subset) -> std::optional<PartialTree>
    {
        if (auto it = memo_.find(subset); it != memo_.end())
            return it->second;

        auto result = search(subset);
        if (! result && blocking_ == 0)
            blocking_ = subset;
        memo_.emplace(subset, result);
        return result;
    }

    [[nodiscard]] auto blocking() const -> VertexMask { return blocking_; }

private:
    auto search(VertexMask subset) -> std::optional<PartialTree>
    {
        PartialTree tree{};
        auto members = mask_members(subset);
        if (members.size() == 1)
            return tree;
        if (members.size() == 2) {
            tree[members[0]] = VertexMask{1} << members[1];
            tree[members[1]] = VertexMask{1} << members[0];
            return tree;
        }

        for (auto x : members) {
            auto without_x = build(subset & ~(VertexMask{1} << x));
            if (! without_x)
                continue;
            for (auto leaf : members) {
                if (leaf == x || popcount((*without_x)[leaf]) != 1)
                    continue;
                auto d = static_cast<VertexId>(std::countr_zero((*without_x)[leaf]));
                if (! is_intersection_cover(dag_, d, x, leaf))
                    continue;
                auto without_leaf = build(subset & ~(VertexMask{1} << leaf));
                if (! without_leaf)
                    continue;
                auto joined = *without_leaf;
                joined[leaf] |= VertexMask{1} << d;
                joined[d] |= VertexMask{1} << leaf;
                return joined;
            }
        }
        return std::nullopt;
    }

    const PatternDag &dag_;
    std::unordered_map<VertexMask, std::optional<PartialTree>> memo_;
    VertexMask blocking_ = 0;
};

// Tree path between two nodes, endpoints included.
auto tree_path(const std::vector<std::vector<int>> &adjacent, int from, int to) -> std::vector<int>
{
    std::vector<int> parent(adjacent.size(), -2);
    std::vector<int> queue{from};
    parent[static_cast<std::size_t>(from)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : adjacent[static_cast<std::size_t>(v)])
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    std::vector<int> path;
    if (parent[static_cast<std::size_t>(to)] == -2)
        return path;
    for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    return path;
}

} // namespace

auto build_width1_decomposition(const PatternDag &dag) -> Width1Result
{
    Width1Builder builder(dag);
    auto all_sources = dag.source_mask();
    auto tree = builder.build(all_sources);
    if (! tree)
        return DecompositionFailure{builder.blocking()};

    DagTreeDecomposition result;
    auto sources = dag.sources();
    std::array<int, kMaxPatternSize> node_of{};
    for (std::size_t i = 0; i < sources.size(); ++i) {
        node_of[sources[i]] = static_cast<int>(i);
        result.bags.push_back(VertexMask{1} << sources[i]);
    }
    for (auto s : sources)
        for (auto t : mask_members((*tree)[s]))
            if (s < t)
                result.tree_edges.emplace_back(node_of[s], node_of[t]);

    if (! validate_decomposition(dag, result))
        throw ConsistencyError("width-1 builder produced a decomposition that fails validation");
    return result;
}

auto validate_decomposition(const PatternDag &dag, const DagTreeDecomposition &t) -> bool
{
    const auto n = t.node_count();
    if (n == 0)
        return false;

    VertexMask covered = 0;
    for (auto bag : t.bags) {
        if ((bag & ~dag.source_mask()) != 0)
            return false;
        covered |= bag;
    }
    if (covered != dag.source_mask())
        return false;

    if (static_cast<int>(t.tree_edges.size()) != n - 1)
        return false;
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n));
    for (auto [a, b] : t.tree_edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            return false;
        adjacent[static_cast<std::size_t>(a)].push_back(b);
        adjacent[static_cast<std::size_t>(b)].push_back(a);
    }

    std::vector<VertexMask> reach(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        reach[static_cast<std::size_t>(i)] = dag.reachable_from(t.bags[static_cast<std::size_t>(i)]);

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto path = tree_path(adjacent, a, b);
            if (path.empty())
                return false; // disconnected
            auto shared = reach[static_cast<std::size_t>(a)] & reach[static_cast<std::size_t>(b)];
            for (int mid : path)
                if ((shared & ~reach[static_cast<std::size_t>(mid)]) != 0)
                    return false;
        }
    return true;
}

auto root_decomposition(const PatternDag &dag, const DagTreeDecomposition &t) -> RootedDecomposition
{
    const auto n = static_cast<std::size_t>(t.node_count());
    RootedDecomposition r;
    r.reachable.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        r.reachable[i] = dag.reachable_from(t.bags[i]);

    auto min_source = [&](std::size_t i) { return std::countr_zero(t.bags[i]); };
    r.root = 0;
    for (std::size_t i = 1; i < n; ++i) {
        auto best = static_cast<std::size_t>(r.root);
        auto pi = popcount(r.reachable[i]), pb = popcount(r.reachable[best]);
        if (pi > pb || (pi == pb && min_source(i) < min_source(best)))
            r.root = static_cast<int>(i);
    }

    std::vector<std::vector<int>> adjacent(n);
    for (auto [a, b] : t.tree_edges) {
        adjacent[static_cast<std::size_t>(a)].push_back(b);
        adjacent[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto &list : adjacent)
        std::sort(list.begin(), list.end());

    r.parent.assign(n, -2);
    r.children.assign(n, {});
    std::vector<int> bfs{r.root};
    r.parent[static_cast<std::size_t>(r.root)] = -1;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        int v = bfs[head];
        for (int w : adjacent[static_cast<std::size_t>(v)])
            if (r.parent[static_cast<std::size_t>(w)] == -2) {
                r.parent[static_cast<std::size_t>(w)] = v;
                r.children[static_cast<std::size_t>(v)].push_back(w);
                bfs.push_back(w);
            }
    }
    r.post_order.assign(bfs.rbegin(), bfs.rend());

    r.separator.assign(n, 0);
    r.covered.assign(n, 0);
    for (int v : r.post_order) {
        auto vi = static_cast<std::size_t>(v);
        r.covered[vi] |= r.reachable[vi];
        if (r.parent[vi] >= 0) {
            auto p = static_cast<std::size_t>(r.parent[vi]);
            r.separator[vi] = r.reachable[vi] & r.reachable[p];
            r.covered[p] |= r.covered[vi];
        }
    }
    return r;
}

namespace {

auto mask_text(VertexMask m) -> std::string
{
    std::string s = "{";
    bool first = true;
    for (auto v : mask_members(m)) {
        if (! first)
            s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

} // namespace

auto decomposition_to_dot(const PatternDag &dag, const DagTreeDecomposition &t, const std::string &name) -> std::string
{
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (int i = 0; i < t.node_count(); ++i) {
        auto bag = t.bags[static_cast<std::size_t>(i)];
        out << "  n" << i << " [label=\"bag " << mask_text(bag) << "\\nreach " << mask_text(dag.reachable_from(bag))
            << "\"];\n";
    }
    for (auto [a, b] : t.tree_edges) {
        auto sep = dag.reachable_from(t.bags[static_cast<std::size_t>(a)]) &
            dag.reachable_from(t.bags[static_cast<std::size_t>(b)]);
        out << "  n" << a << " -- n" << b << " [label=\"" << mask_text(sep) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace homcount
