#pragma once

#include <algorithm>

#include <homcount/count.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace homcount {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Adjacency lists are strictly sorted, so the graph has no self-loops and no
/// duplicate edges, and v is in neighbours(u) iff u is in neighbours(v).
/// Optional external labels are kept for reporting only; all algorithms work
/// on the dense ids 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on vertices 0..n-1. Duplicate edges (in either
    /// direction) collapse; a self-loop or out-of-range endpoint throws
    /// InvalidArgument.
    static auto from_edges(VertexId vertex_count, std::span<const Edge> edges,
        std::vector<std::string> labels = {}) -> Graph;

    [[nodiscard]] auto vertex_count() const -> VertexId { return vertex_count_; }
    [[nodiscard]] auto edge_count() const -> std::size_t { return edge_count_; }

    [[nodiscard]] auto neighbours(VertexId v) const -> std::span<const VertexId>
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] auto degree(VertexId v) const -> std::size_t { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] auto max_degree() const -> std::size_t;
    [[nodiscard]] auto has_edge(VertexId u, VertexId v) const -> bool;

    /// Every edge once as (u, v) with u < v, sorted.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    [[nodiscard]] auto has_labels() const -> bool { return ! labels_.empty(); }
    /// External label of v, or its decimal id when the graph is unlabelled.
    [[nodiscard]] auto label(VertexId v) const -> std::string;
    [[nodiscard]] auto find_label(std::string_view label) const -> std::optional<VertexId>;

    [[nodiscard]] auto is_connected() const -> bool;

    friend auto operator==(const Graph &a, const Graph &b) -> bool
    {
        return a.vertex_count_ == b.vertex_count_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
    }

private:
    VertexId vertex_count_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> label_index_;
};

/// Reads "u v" lines. '#' lines and blank lines are skipped; tokens are
/// arbitrary labels, remapped to ids in first-appearance order.
auto parse_edge_list(std::istream &in) -> Graph;
auto parse_edge_list(std::string_view text) -> Graph;
auto read_edge_list_file(const std::string &path) -> Graph;

/// Canonical writer: one "u v" line per edge with u < v by internal id,
/// sorted. Labels are not written.
void write_edge_list(const Graph &g, std::ostream &out);
auto to_edge_list_string(const Graph &g) -> std::string;

struct DegeneracyOrder {
    std::vector<VertexId> order;
    std::uint32_t kappa = 0;
};

/// Repeated minimum-degree removal; ties go to the smallest id.
auto degeneracy_order(const Graph &g) -> DegeneracyOrder;

/// An acyclic orientation of a host graph induced by a vertex order.
class OrientedGraph {
public:
    OrientedGraph() = default;

    /// Throws InvalidArgument unless order is a permutation of 0..n-1.
    static auto orient(const Graph &g, std::span<const VertexId> order) -> OrientedGraph;

    [[nodiscard]] auto vertex_count() const -> VertexId { return static_cast<VertexId>(rank_.size()); }
    [[nodiscard]] auto arc_count() const -> std::size_t { return out_.size(); }
    [[nodiscard]] auto out_neighbours(VertexId v) const -> std::span<const VertexId>
    {
        return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
    }
    [[nodiscard]] auto in_neighbours(VertexId v) const -> std::span<const VertexId>
    {
        return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
    }
    [[nodiscard]] auto out_degree(VertexId v) const -> std::size_t { return out_offsets_[v + 1] - out_offsets_[v]; }
    [[nodiscard]] auto max_out_degree() const -> std::size_t;
    [[nodiscard]] auto has_arc(VertexId from, VertexId to) const -> bool
    {
        auto out = out_neighbours(from);
        return std::binary_search(out.begin(), out.end(), to);
    }
    [[nodiscard]] auto order() const -> const std::vector<VertexId> & { return order_; }
    [[nodiscard]] auto rank(VertexId v) const -> std::size_t { return rank_[v]; }
    /// Kahn's algorithm over the arcs; true for every object built by orient().
    [[nodiscard]] auto is_acyclic() const -> bool;

private:
    std::vector<VertexId> order_;
    std::vector<std::size_t> rank_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<VertexId> out_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<VertexId> in_;
};

struct InducedSubgraph {
    Graph graph;
    /// original_id[new id] = id in the source graph.
    std::vector<VertexId> original_id;
};

/// G - removed. Throws InvalidArgument on an out-of-range id.
auto delete_vertices(const Graph &g, std::span<const VertexId> removed) -> InducedSubgraph;

/// Triangle count by degeneracy orientation and out-neighbour intersection.
auto count_triangles_direct(const Graph &g) -> Count;

} // namespace homcount
