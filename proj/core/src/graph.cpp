#include <homcount/errors.hpp>
#include <homcount/graph.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>

namespace homcount {

auto Graph::from_edges(VertexId vertex_count, std::span<const Edge> edges, std::vector<std::string> labels) -> Graph
{
    if (! labels.empty() && labels.size() != vertex_count)
        throw InvalidArgument("label table size does not match vertex count");

    std::vector<std::size_t> degree(vertex_count, 0);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                std::to_string(vertex_count) + " vertices");
        if (u == v)
            throw InvalidArgument("self-loop on vertex " + (labels.empty() ? std::to_string(u) : labels[u]));
        ++degree[u];
        ++degree[v];
    }

    Graph g;
    g.vertex_count_ = vertex_count;
    g.offsets_.assign(vertex_count + 1, 0);
    for (VertexId v = 0; v < vertex_count; ++v)
        g.offsets_[v + 1] = g.offsets_[v] + degree[v];

    std::vector<VertexId> raw(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        raw[fill[u]++] = v;
        raw[fill[v]++] = u;
    }

    // sort and dedup each list, then compact
    g.adjacency_.reserve(raw.size());
    std::vector<std::size_t> offsets(vertex_count + 1, 0);
    for (VertexId v = 0; v < vertex_count; ++v) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        g.adjacency_.insert(g.adjacency_.end(), first, last);
        offsets[v + 1] = g.adjacency_.size();
    }
    g.offsets_ = std::move(offsets);
    g.adjacency_.shrink_to_fit();
    g.edge_count_ = g.adjacency_.size() / 2;

    g.labels_ = std::move(labels);
    for (VertexId v = 0; v < g.labels_.size(); ++v)
        g.label_index_.emplace(g.labels_[v], v);
    return g;
}

auto Graph::max_degree() const -> std::size_t
{
    std::size_t best = 0;
    for (VertexId v = 0; v < vertex_count_; ++v)
        best = std::max(best, degree(v));
    return best;
}

auto Graph::has_edge(VertexId u, VertexId v) const -> bool
{
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto n = neighbours(u);
    return std::binary_search(n.begin(), n.end(), v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count_; ++u)
        for (auto v : neighbours(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::label(VertexId v) const -> std::string
{
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

auto Graph::find_label(std::string_view label) const -> std::optional<VertexId>
{
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

auto Graph::is_connected() const -> bool
{
    if (vertex_count_ == 0)
        return false;
    std::vector<bool> seen(vertex_count_, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    VertexId reached = 1;
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : neighbours(v))
            if (! seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == vertex_count_;
}

auto parse_edge_list(std::istream &in) -> Graph
{
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<Edge> edges;

    auto intern = [&](const std::string &token) {
        auto [it, inserted] = ids.emplace(token, static_cast<VertexId>(labels.size()));
        if (inserted)
            labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;

        std::istringstream tokens(line);
        std::string a, b, extra;
        if (! (tokens >> a >> b) || (tokens >> extra))
            throw ParseError(line_number, "expected exactly two tokens, got '" + line + "'");
        if (a == b)
            throw ParseError(line_number, "self-loop on vertex '" + a + "'");
        auto u = intern(a);
        auto v = intern(b);
        edges.emplace_back(u, v);
    }
    const auto n = static_cast<VertexId>(labels.size());
    return Graph::from_edges(n, edges, std::move(labels));
}

auto parse_edge_list(std::string_view text) -> Graph
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

auto read_edge_list_file(const std::string &path) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw ParseError(0, "cannot open '" + path + "'");
    return parse_edge_list(in);
}

void write_edge_list(const Graph &g, std::ostream &out)
{
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto to_edge_list_string(const Graph &g) -> std::string
{
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

auto degeneracy_order(const Graph &g) -> DegeneracyOrder
{
    const auto n = g.vertex_count();
    DegeneracyOrder result;
    result.order.reserve(n);

    std::vector<std::size_t> residual(n);
    std::vector<bool> removed(n, false);
    using Entry = std::pair<std::size_t, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (VertexId v = 0; v < n; ++v) {
        residual[v] = g.degree(v);
        queue.emplace(residual[v], v);
    }

    while (! queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (removed[v] || d != residual[v])
            continue;
        removed[v] = true;
        result.order.push_back(v);
        result.kappa = std::max(result.kappa, static_cast<std::uint32_t>(d));
        for (auto w : g.neighbours(v))
            if (! removed[w])
                queue.emplace(--residual[w], w);
    }
    return result;
}

auto OrientedGraph::orient(const Graph &g, std::span<const VertexId> order) -> OrientedGraph
{
    const auto n = g.vertex_count();
    if (order.size() != n)
        throw InvalidArgument("order has " + std::to_string(order.size()) + " entries for " + std::to_string(n) + " vertices");

    OrientedGraph d;
    d.order_.assign(order.begin(), order.end());
    d.rank_.assign(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = order[i];
        if (v >= n || d.rank_[v] != SIZE_MAX)
            throw InvalidArgument("order is not a permutation of the vertex ids");
        d.rank_[v] = i;
    }

    d.out_offsets_.assign(n + 1, 0);
    d.in_offsets_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v)
        for (auto w : g.neighbours(v)) {
            if (d.rank_[v] < d.rank_[w])
                ++d.out_offsets_[v + 1];
            else
                ++d.in_offsets_[v + 1];
        }
    for (VertexId v = 0; v < n; ++v) {
        d.out_offsets_[v + 1] += d.out_offsets_[v];
        d.in_offsets_[v + 1] += d.in_offsets_[v];
    }
    d.out_.resize(d.out_offsets_.back());
    d.in_.resize(d.in_offsets_.back());
    for (VertexId v = 0; v < n; ++v) {
        auto out_fill = d.out_offsets_[v];
        auto in_fill = d.in_offsets_[v];
        // neighbour lists are sorted, so these stay sorted by id
        for (auto w : g.neighbours(v)) {
            if (d.rank_[v] < d.rank_[w])
                d.out_[out_fill++] = w;
            else
                d.in_[in_fill++] = w;
        }
    }
    return d;
}

auto OrientedGraph::max_out_degree() const -> std::size_t
{
    std::size_t best = 0;
    for (VertexId v = 0; v < vertex_count(); ++v)
        best = std::max(best, out_degree(v));
    return best;
}

auto OrientedGraph::is_acyclic() const -> bool
{
    const auto n = vertex_count();
    std::vector<std::size_t> indegree(n);
    for (VertexId v = 0; v < n; ++v)
        indegree[v] = in_offsets_[v + 1] - in_offsets_[v];
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    std::size_t processed = 0;
    while (! ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++processed;
        for (auto w : out_neighbours(v))
            if (--indegree[w] == 0)
                ready.push_back(w);
    }
    return processed == n;
}

auto delete_vertices(const Graph &g, std::span<const VertexId> removed) -> InducedSubgraph
{
    const auto n = g.vertex_count();
    std::vector<bool> gone(n, false);
    for (auto v : removed) {
        if (v >= n)
            throw InvalidArgument("cannot delete vertex " + std::to_string(v) + ": graph has " + std::to_string(n) + " vertices");
        gone[v] = true;
    }

    InducedSubgraph result;
    std::vector<VertexId> new_id(n, 0);
    for (VertexId v = 0; v < n; ++v)
        if (! gone[v]) {
            new_id[v] = static_cast<VertexId>(result.original_id.size());
            result.original_id.push_back(v);
        }

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (! gone[u] && ! gone[v])
            edges.emplace_back(new_id[u], new_id[v]);

    std::vector<std::string> labels;
    if (g.has_labels())
        for (auto v : result.original_id)
            labels.push_back(g.label(v));

    result.graph = Graph::from_edges(static_cast<VertexId>(result.original_id.size()), edges, std::move(labels));
    return result;
}

auto count_triangles_direct(const Graph &g) -> Count
{
    auto order = degeneracy_order(g);
    auto dag = OrientedGraph::orient(g, order.order);
    std::uint64_t total = 0;
    for (VertexId u = 0; u < dag.vertex_count(); ++u) {
        auto out_u = dag.out_neighbours(u);
        for (auto v : out_u) {
            auto out_v = dag.out_neighbours(v);
            auto a = out_u.begin();
            auto b = out_v.begin();
            while (a != out_u.end() && b != out_v.end()) {
                if (*a < *b)
                    ++a;
                else if (*b < *a)
                    ++b;
                else {
                    ++total;
                    ++a;
                    ++b;
                }
            }
        }
    }
    return Count{total};
}

} // namespace homcount
