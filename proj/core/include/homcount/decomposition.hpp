#pragma once

#include <homcount/pattern.hpp>

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace homcount {

/// A tree whose nodes are bags of sources of a pattern DAG.
///
/// The width-1 builder only produces singleton bags, but the type and the
/// validator accept arbitrary bags.
struct DagTreeDecomposition {
    std::vector<VertexMask> bags;
    std::vector<std::pair<int, int>> tree_edges;

    [[nodiscard]] auto node_count() const -> int { return static_cast<int>(bags.size()); }
    [[nodiscard]] auto width() const -> int;
    [[nodiscard]] auto neighbours(int node) const -> std::vector<int>;
    /// Node whose bag is exactly {source}, or -1.
    [[nodiscard]] auto node_of(VertexId source) const -> int;
};

/// Why a width-1 build stopped: no good pair exists for this source subset.
struct DecompositionFailure {
    VertexMask blocking_subset = 0;
};

using Width1Result = std::variant<DagTreeDecomposition, DecompositionFailure>;

/// Builds a width-1 DAG tree decomposition by the leaf-attachment induction:
/// for a source subset S, find x in S and a leaf l of T(S - x) whose unique
/// neighbour d covers reachable(x) ∩ reachable(l), then attach l to d in
/// T(S - l). Subsets are memoised by bitmask; candidates x and leaves l are
/// scanned in ascending id and the first success wins.
///
/// Succeeds for every orientation of a pattern whose longest induced cycle
/// is at most 5. The result is always checked with validate_decomposition;
/// a failed check throws ConsistencyError.
[[nodiscard]] auto build_width1_decomposition(const PatternDag &dag) -> Width1Result;

/// Exhaustive check of the three defining properties: bags are source
/// subsets, bags cover every source, and every node on the tree path between
/// two nodes covers the intersection of their reachable sets. Also rejects
/// anything that is not a tree.
[[nodiscard]] auto validate_decomposition(const PatternDag &dag, const DagTreeDecomposition &t) -> bool;

/// A decomposition rooted for bottom-up evaluation.
struct RootedDecomposition {
    int root = -1;
    std::vector<int> parent;                 // -1 at the root
    std::vector<std::vector<int>> children;
    std::vector<int> post_order;             // children before parents
    std::vector<VertexMask> reachable;       // reachable(bag) per node
    std::vector<VertexMask> separator;       // reachable(node) ∩ reachable(parent); 0 at the root
    std::vector<VertexMask> covered;         // union of reachable over the node's subtree
};

/// Roots at the node with the largest reachable set; ties go to the node
/// whose bag has the smallest source id.
[[nodiscard]] auto root_decomposition(const PatternDag &dag, const DagTreeDecomposition &t) -> RootedDecomposition;

[[nodiscard]] auto decomposition_to_dot(const PatternDag &dag, const DagTreeDecomposition &t,
    const std::string &name = "decomposition") -> std::string;

} // namespace homcount
