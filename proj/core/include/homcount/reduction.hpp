#pragma once

#include <homcount/count.hpp>
#include <homcount/graph.hpp>
#include <homcount/hom_count.hpp>
#include <homcount/pattern.hpp>

#include <array>
#include <cstddef>
#include <vector>

namespace homcount {

/// r = 3 * ell + q, with path lengths between the core part pairs
/// (1,2), (2,3) and (1,3).
struct GadgetParameters {
    int k = 0;
    int r = 0;
    int ell = 0;
    int q = 0;
    std::array<int, 3> path_lengths{};
};

[[nodiscard]] auto gadget_parameters(int k, int r) -> GadgetParameters;

/// The triangle-counting gadget built from a host G and a pattern H whose
/// longest induced cycle C has length r >= 6.
///
/// Vertex layout: fixed vertices [0, k-r), then the core copies V1, V2, V3
/// (n each), then auxiliary path interiors grouped by pair (12, 23, 13),
/// then host edge index, then role (ij before ji), then depth. Partition part
/// i is the intended image of pattern vertex i.
struct ReductionInstance {
    Graph gadget;
    std::vector<std::vector<VertexId>> parts;
    GadgetParameters params;
    VertexId host_vertices = 0;
    std::size_t host_edges = 0;

    /// Pattern vertices of C in walk order, starting at a_{k-r+1}.
    std::vector<VertexId> cycle;
    /// Pattern vertices off C in ascending id: fixed vertex z_i copies off_cycle[i].
    std::vector<VertexId> off_cycle;
    std::vector<VertexId> fixed_set;
    std::array<std::vector<VertexId>, 3> core_parts;
    /// aux_slices[pair][t-1] = V_pair^t, t = distance to the lower core part.
    std::array<std::vector<std::vector<VertexId>>, 3> aux_slices;
    /// bridge_map[position on C] = index into parts.
    std::vector<std::size_t> bridge_map;

    [[nodiscard]] auto partition() const -> VertexPartition
    {
        return {parts, gadget.vertex_count()};
    }
    [[nodiscard]] auto auxiliary_count() const -> std::size_t;
    [[nodiscard]] auto core_count() const -> std::size_t { return 3 * std::size_t{host_vertices}; }
    /// |V(G_H)| < 6 m ell + 3 n + k.
    [[nodiscard]] auto within_size_bound() const -> bool;
};

/// Throws InvalidArgument when the pattern's longest induced cycle is below 6.
[[nodiscard]] auto build_gadget(const Graph &g, const Pattern &p) -> ReductionInstance;

struct GadgetDegeneracyCheck {
    std::size_t bound = 0;
    /// Max out-degree when oriented by auxiliary < core < fixed.
    std::size_t block_order_out_degree = 0;
    std::size_t degeneracy = 0;
    bool ok = false;
};

/// Checks the k - r + 2 degeneracy bound both through the block ordering
/// and through an independent degeneracy computation.
[[nodiscard]] auto verify_gadget_degeneracy(const ReductionInstance &inst) -> GadgetDegeneracyCheck;

struct ReductionResult {
    Count partitioned_homs;
    Count partitioned_matches;
    Count triangles;
};

/// Triangle count of g recovered from partitioned-match counts of p in the
/// gadget. Uses the brute engine for every inclusion-exclusion term.
[[nodiscard]] auto count_triangles_via_reduction(const ReductionInstance &inst, const Pattern &p,
    const CountOptions &options = {}) -> ReductionResult;
[[nodiscard]] auto count_triangles_via_reduction(const Graph &g, const Pattern &p, const CountOptions &options = {})
    -> Count;

} // namespace homcount
