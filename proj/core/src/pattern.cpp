#include <homcount/errors.hpp>
#include <homcount/pattern.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace homcount {

auto mask_members(VertexMask m) -> std::vector<VertexId>
{
    std::vector<VertexId> members;
    members.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m != 0) {
        members.push_back(static_cast<VertexId>(std::countr_zero(m)));
        m &= m - 1;
    }
    return members;
}

namespace {

auto neighbour_masks_of(const Graph &g) -> std::vector<VertexMask>
{
    std::vector<VertexMask> masks(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (auto w : g.neighbours(v))
            masks[v] |= VertexMask{1} << w;
    return masks;
}

auto is_induced_cycle(std::span<const VertexMask> nbrs, VertexMask subset) -> bool
{
    if (std::popcount(subset) < 3)
        return false;
    for (auto v : mask_members(subset))
        if (std::popcount(nbrs[v] & subset) != 2)
            return false;
    // all degrees two: it is a single cycle iff connected
    VertexMask seen = subset & (~subset + 1);
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for (auto v : mask_members(frontier))
            next |= nbrs[v] & subset;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == subset;
}

void check_small(const Graph &g)
{
    if (g.vertex_count() > static_cast<VertexId>(kMaxPatternSize))
        throw SizeLimitError("graph with " + std::to_string(g.vertex_count()) + " vertices exceeds the pattern limit of " +
            std::to_string(kMaxPatternSize));
}

} // namespace

auto is_acyclic_digraph(std::span<const VertexMask> out_masks) -> bool
{
    const auto k = out_masks.size();
    std::vector<int> indegree(k, 0);
    for (std::size_t v = 0; v < k; ++v)
        for (auto w : mask_members(out_masks[v]))
            ++indegree[w];
    std::vector<VertexId> ready;
    for (std::size_t v = 0; v < k; ++v)
        if (indegree[v] == 0)
            ready.push_back(static_cast<VertexId>(v));
    std::size_t processed = 0;
    while (! ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++processed;
        for (auto w : mask_members(out_masks[v]))
            if (--indegree[w] == 0)
                ready.push_back(w);
    }
    return processed == k;
}

auto longest_induced_cycle(const Graph &g) -> int
{
    check_small(g);
    auto nbrs = neighbour_masks_of(g);
    int best = 0;
    const VertexMask all = (VertexMask{1} << g.vertex_count()) - 1;
    for (VertexMask subset = 1; subset <= all && subset != 0; ++subset)
        if (std::popcount(subset) > best && is_induced_cycle(nbrs, subset))
            best = std::popcount(subset);
    return best;
}

auto canonical_longest_induced_cycle(const Graph &g) -> std::vector<VertexId>
{
    check_small(g);
    auto nbrs = neighbour_masks_of(g);
    const auto r = longest_induced_cycle(g);
    if (r == 0)
        return {};

    std::optional<std::vector<VertexId>> best;
    const VertexMask all = (VertexMask{1} << g.vertex_count()) - 1;
    for (VertexMask subset = 1; subset <= all && subset != 0; ++subset) {
        if (std::popcount(subset) != r || ! is_induced_cycle(nbrs, subset))
            continue;
        auto members = mask_members(subset);
        if (! best || members < *best)
            best = std::move(members);
    }

    VertexMask subset = 0;
    for (auto v : *best)
        subset |= VertexMask{1} << v;
    std::vector<VertexId> cycle{best->front()};
    VertexMask visited = VertexMask{1} << best->front();
    while (static_cast<int>(cycle.size()) < r) {
        auto options = nbrs[cycle.back()] & subset & ~visited;
        auto next = static_cast<VertexId>(std::countr_zero(options));
        cycle.push_back(next);
        visited |= VertexMask{1} << next;
    }
    return cycle;
}

Pattern::Pattern(Graph graph, int max_k) :
    graph_(std::move(graph))
{
    if (max_k > kMaxPatternSize)
        throw SizeLimitError("pattern size limit " + std::to_string(max_k) + " exceeds the hard ceiling of " +
            std::to_string(kMaxPatternSize));
    if (static_cast<int>(graph_.vertex_count()) > max_k)
        throw SizeLimitError("pattern has " + std::to_string(graph_.vertex_count()) + " vertices; limit is " +
            std::to_string(max_k));
    if (graph_.vertex_count() == 0)
        throw InvalidArgument("pattern is empty");
    if (! graph_.is_connected())
        throw InvalidArgument("pattern is disconnected");

    edges_ = graph_.edges();
    neighbour_masks_ = neighbour_masks_of(graph_);
    licl_ = homcount::longest_induced_cycle(graph_);
    orientations_ = enumerate_acyclic_orientations(*this);
}

PatternDag::PatternDag(const Pattern &pattern, EdgeMask directions) :
    k_(pattern.size()),
    directions_(directions),
    out_(static_cast<std::size_t>(k_), 0),
    in_(static_cast<std::size_t>(k_), 0),
    reachable_(static_cast<std::size_t>(k_), 0)
{
    const auto &edges = pattern.edges();
    if (edges.size() < 64 && (directions >> edges.size()) != 0)
        throw InvalidArgument("direction mask has bits beyond the pattern's edges");
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (! ((directions >> e) & 1U))
            std::swap(u, v);
        out_[u] |= VertexMask{1} << v;
        in_[v] |= VertexMask{1} << u;
    }
    if (! is_acyclic_digraph(out_))
        throw InvalidArgument("edge directions contain a directed cycle");

    // Kahn's order, smallest ready vertex first
    std::vector<int> indegree(static_cast<std::size_t>(k_));
    for (int v = 0; v < k_; ++v)
        indegree[static_cast<std::size_t>(v)] = std::popcount(in_[static_cast<std::size_t>(v)]);
    VertexMask ready = 0;
    for (int v = 0; v < k_; ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0)
            ready |= VertexMask{1} << v;
    sources_ = ready;
    while (ready != 0) {
        auto v = static_cast<VertexId>(std::countr_zero(ready));
        ready &= ready - 1;
        topo_.push_back(v);
        for (auto w : mask_members(out_[v]))
            if (--indegree[w] == 0)
                ready |= VertexMask{1} << w;
    }

    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        VertexMask closure = VertexMask{1} << *it;
        for (auto w : mask_members(out_[*it]))
            closure |= reachable_[w];
        reachable_[*it] = closure;
    }
}

auto PatternDag::from_order(const Pattern &pattern, std::span<const VertexId> order) -> PatternDag
{
    std::vector<std::size_t> rank(static_cast<std::size_t>(pattern.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = i;
    EdgeMask directions = 0;
    const auto &edges = pattern.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (rank[edges[e].first] < rank[edges[e].second])
            directions |= EdgeMask{1} << e;
    return PatternDag(pattern, directions);
}

auto PatternDag::reachable_from(VertexMask set) const -> VertexMask
{
    VertexMask result = 0;
    for (auto v : mask_members(set))
        result |= reachable_[v];
    return result;
}

auto enumerate_acyclic_orientations(const Pattern &p) -> std::vector<PatternDag>
{
    const auto k = static_cast<std::size_t>(p.size());
    const auto &edges = p.edges();
    std::vector<VertexId> order(k);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::vector<std::size_t> rank(k);

    std::unordered_set<EdgeMask> seen;
    do {
        for (std::size_t i = 0; i < k; ++i)
            rank[order[i]] = i;
        EdgeMask directions = 0;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (rank[edges[e].first] < rank[edges[e].second])
                directions |= EdgeMask{1} << e;
        seen.insert(directions);
    } while (std::next_permutation(order.begin(), order.end()));

    std::vector<EdgeMask> masks(seen.begin(), seen.end());
    std::sort(masks.begin(), masks.end());
    std::vector<PatternDag> result;
    result.reserve(masks.size());
    for (auto m : masks)
        result.emplace_back(p, m);
    return result;
}

auto UniqueReachabilityGraph::has_edge(VertexId a, VertexId b) const -> bool
{
    if (a > b)
        std::swap(a, b);
    return std::any_of(edges.begin(), edges.end(), [&](const auto &e) { return e.a == a && e.b == b; });
}

auto UniqueReachabilityGraph::is_acyclic() const -> bool
{
    // union-find over source ids
    std::vector<VertexId> parent(kMaxPatternSize);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto &e : edges) {
        auto ra = find(e.a), rb = find(e.b);
        if (ra == rb)
            return false;
        parent[ra] = rb;
    }
    return true;
}

auto unique_reachability_graph(const PatternDag &dag, VertexMask subset) -> UniqueReachabilityGraph
{
    if ((subset & ~dag.source_mask()) != 0)
        throw InvalidArgument("unique reachability subset contains a non-source vertex");

    UniqueReachabilityGraph ur;
    ur.sources = mask_members(subset);
    for (std::size_t i = 0; i < ur.sources.size(); ++i)
        for (std::size_t j = i + 1; j < ur.sources.size(); ++j) {
            auto a = ur.sources[i], b = ur.sources[j];
            VertexMask others = subset & ~(VertexMask{1} << a) & ~(VertexMask{1} << b);
            VertexMask unique = dag.reachable(a) & dag.reachable(b) & ~dag.reachable_from(others);
            if (unique != 0)
                ur.edges.push_back({a, b, static_cast<VertexId>(std::countr_zero(unique))});
        }
    return ur;
}

auto is_intersection_cover(const PatternDag &dag, VertexId s, VertexId s1, VertexId s2) -> bool
{
    if (! dag.is_source(s) || ! dag.is_source(s1) || ! dag.is_source(s2))
        throw InvalidArgument("intersection-cover arguments must all be sources");
    return ((dag.reachable(s1) & dag.reachable(s2)) & ~dag.reachable(s)) == 0;
}

auto automorphisms(const Graph &g) -> std::vector<std::vector<VertexId>>
{
    check_small(g);
    const auto k = g.vertex_count();
    auto nbrs = neighbour_masks_of(g);
    std::vector<std::vector<VertexId>> result;
    std::vector<VertexId> image(k);
    VertexMask used = 0;

    // assign images in id order; prune as soon as an assigned pair disagrees
    auto extend = [&](auto &self, VertexId v) -> void {
        if (v == k) {
            result.push_back(image);
            return;
        }
        for (VertexId w = 0; w < k; ++w) {
            if ((used >> w) & 1U)
                continue;
            if (g.degree(v) != g.degree(w))
                continue;
            bool ok = true;
            for (VertexId u = 0; u < v && ok; ++u)
                ok = (((nbrs[v] >> u) & 1U) == ((nbrs[w] >> image[u]) & 1U));
            if (! ok)
                continue;
            image[v] = w;
            used |= VertexMask{1} << w;
            self(self, v + 1);
            used &= ~(VertexMask{1} << w);
        }
    };
    extend(extend, 0);
    return result;
}

auto automorphism_count(const Pattern &p) -> Count
{
    return Count{static_cast<std::uint64_t>(automorphisms(p.graph()).size())};
}

} // namespace homcount
