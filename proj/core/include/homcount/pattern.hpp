#pragma once

#include <homcount/count.hpp>
#include <homcount/graph.hpp>

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace homcount {

/// Subset of pattern vertices (or sources), bit v set iff v is a member.
using VertexMask = std::uint32_t;
/// One bit per pattern edge, indexed like Pattern::edges().
using EdgeMask = std::uint64_t;

inline constexpr int kDefaultMaxPatternSize = 8;
/// Hard ceiling: edge masks must fit 64 bits, and orientation enumeration
/// walks k! vertex orders.
inline constexpr int kMaxPatternSize = 11;

[[nodiscard]] inline auto popcount(VertexMask m) -> int { return std::popcount(m); }
[[nodiscard]] auto mask_members(VertexMask m) -> std::vector<VertexId>;

class PatternDag;

/// A connected pattern graph H with k <= max_k vertices.
///
/// The longest induced cycle length and the full list of distinct acyclic
/// orientations are computed once at construction.
class Pattern {
public:
    /// Throws SizeLimitError if k > max_k (or max_k > kMaxPatternSize) and
    /// InvalidArgument if the graph is empty or disconnected.
    explicit Pattern(Graph graph, int max_k = kDefaultMaxPatternSize);

    [[nodiscard]] auto graph() const -> const Graph & { return graph_; }
    [[nodiscard]] auto size() const -> int { return static_cast<int>(graph_.vertex_count()); }
    [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return edges_; }
    [[nodiscard]] auto neighbour_mask(VertexId v) const -> VertexMask { return neighbour_masks_[v]; }
    [[nodiscard]] auto longest_induced_cycle() const -> int { return licl_; }
    /// Distinct acyclic orientations, sorted by direction bitmask.
    [[nodiscard]] auto orientations() const -> const std::vector<PatternDag> & { return orientations_; }

private:
    Graph graph_;
    std::vector<Edge> edges_;
    std::vector<VertexMask> neighbour_masks_;
    int licl_ = 0;
    std::vector<PatternDag> orientations_;
};

/// An acyclic orientation of a pattern.
///
/// Bit e of the direction mask is set when edge e = (u, v), u < v, points
/// from u to v; clear when it points from v to u.
class PatternDag {
public:
    /// Throws InvalidArgument if the directions contain a cycle.
    PatternDag(const Pattern &pattern, EdgeMask directions);
    /// Orients every edge from the endpoint earlier in order to the later one.
    static auto from_order(const Pattern &pattern, std::span<const VertexId> order) -> PatternDag;

    [[nodiscard]] auto size() const -> int { return k_; }
    [[nodiscard]] auto directions() const -> EdgeMask { return directions_; }
    [[nodiscard]] auto out_mask(VertexId v) const -> VertexMask { return out_[v]; }
    [[nodiscard]] auto in_mask(VertexId v) const -> VertexMask { return in_[v]; }
    [[nodiscard]] auto has_arc(VertexId u, VertexId v) const -> bool { return (out_[u] >> v) & 1U; }
    [[nodiscard]] auto source_mask() const -> VertexMask { return sources_; }
    [[nodiscard]] auto sources() const -> std::vector<VertexId> { return mask_members(sources_); }
    [[nodiscard]] auto is_source(VertexId v) const -> bool { return (sources_ >> v) & 1U; }
    /// Forward closure of v, including v.
    [[nodiscard]] auto reachable(VertexId v) const -> VertexMask { return reachable_[v]; }
    /// Union of reachable(s) over the members of a vertex mask.
    [[nodiscard]] auto reachable_from(VertexMask set) const -> VertexMask;
    /// A topological order of all pattern vertices.
    [[nodiscard]] auto topological_order() const -> const std::vector<VertexId> & { return topo_; }

    friend auto operator==(const PatternDag &a, const PatternDag &b) -> bool
    {
        return a.k_ == b.k_ && a.directions_ == b.directions_;
    }

private:
    int k_ = 0;
    EdgeMask directions_ = 0;
    std::vector<VertexMask> out_;
    std::vector<VertexMask> in_;
    std::vector<VertexMask> reachable_;
    std::vector<VertexId> topo_;
    VertexMask sources_ = 0;
};

/// True iff the directed graph given by per-vertex out-masks has no cycle.
[[nodiscard]] auto is_acyclic_digraph(std::span<const VertexMask> out_masks) -> bool;

/// Longest chordless cycle of a small graph; 0 when there is none.
/// Throws SizeLimitError above kMaxPatternSize vertices.
[[nodiscard]] auto longest_induced_cycle(const Graph &g) -> int;

/// The longest induced cycle whose vertex set is lexicographically smallest,
/// listed in traversal order: starting at its smallest vertex and stepping
/// first to the smaller of that vertex's two cycle neighbours. Empty if the
/// graph has no cycle.
[[nodiscard]] auto canonical_longest_induced_cycle(const Graph &g) -> std::vector<VertexId>;

/// All distinct acyclic orientations via the k! vertex orders, deduplicated
/// by direction mask and sorted.
[[nodiscard]] auto enumerate_acyclic_orientations(const Pattern &p) -> std::vector<PatternDag>;

struct UniqueReachabilityEdge {
    VertexId a, b;       // a < b, both sources
    VertexId witness;    // smallest vertex reachable from exactly {a, b} within the subset
};

/// The unique reachability graph over a subset of a DAG's sources: an edge
/// {a, b} whenever some vertex is reachable from a and from b but from no
/// other member of the subset.
struct UniqueReachabilityGraph {
    std::vector<VertexId> sources;
    std::vector<UniqueReachabilityEdge> edges;

    [[nodiscard]] auto has_edge(VertexId a, VertexId b) const -> bool;
    [[nodiscard]] auto is_acyclic() const -> bool;
};

/// Throws InvalidArgument if subset contains a non-source.
[[nodiscard]] auto unique_reachability_graph(const PatternDag &dag, VertexMask subset) -> UniqueReachabilityGraph;

/// reachable(s1) ∩ reachable(s2) ⊆ reachable(s). Throws InvalidArgument
/// unless all three are sources.
[[nodiscard]] auto is_intersection_cover(const PatternDag &dag, VertexId s, VertexId s1, VertexId s2) -> bool;

/// Every adjacency-preserving permutation, as image vectors, in
/// lexicographic order.
[[nodiscard]] auto automorphisms(const Graph &g) -> std::vector<std::vector<VertexId>>;
[[nodiscard]] auto automorphism_count(const Pattern &p) -> Count;

} // namespace homcount
