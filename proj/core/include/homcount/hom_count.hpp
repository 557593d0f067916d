#pragma once

#include <homcount/count.hpp>
#include <homcount/decomposition.hpp>
#include <homcount/errors.hpp>
#include <homcount/graph.hpp>
#include <homcount/hardness.hpp>
#include <homcount/pattern.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace homcount {

enum class Engine { automatic, dtd, brute };

[[nodiscard]] auto engine_name(Engine e) -> std::string_view;
/// Accepts "auto", "dtd" and "brute"; throws InvalidArgument otherwise.
[[nodiscard]] auto parse_engine(std::string_view name) -> Engine;

/// The decomposition engine was asked to count a pattern whose longest
/// induced cycle is 6 or more.
class ClassificationError : public HomcountError {
public:
    ClassificationError(int licl, HardnessCertificate certificate);
    [[nodiscard]] auto licl() const -> int { return licl_; }
    [[nodiscard]] auto certificate() const -> const HardnessCertificate & { return certificate_; }

private:
    int licl_;
    HardnessCertificate certificate_;
};

struct BruteLimits {
    /// Hosts above this size are refused with SizeLimitError; 0 = no limit.
    VertexId max_host_vertices = 4096;
    /// Search nodes before BudgetExceeded is thrown; 0 = no limit.
    std::uint64_t node_budget = 0;
};

struct CountOptions {
    unsigned threads = 1;
    BruteLimits brute{};
};

/// |Hom(H -> G)| by backtracking in a connectivity-respecting pattern order.
///
/// Candidates come from the adjacency list of an already-mapped neighbour and
/// are checked against every other mapped neighbour. A trailing independent
/// set of pattern vertices is not branched on: each contributes the size of
/// the common neighbourhood of its neighbours' images.
[[nodiscard]] auto count_homs_brute(const Graph &g, const Pattern &p, const BruteLimits &limits = {}) -> Count;

/// Direction-preserving homomorphisms of a pattern DAG into a host DAG, by
/// plain backtracking. Serves as the oracle for the decomposition engine.
[[nodiscard]] auto count_directed_homs_brute(const OrientedGraph &gdir, const PatternDag &hdir) -> Count;

/// Enumerates every direction-preserving map of the sub-DAG induced on
/// reachable(source) into a host DAG. The source takes every host vertex;
/// each later vertex, in topological order, draws candidates from the
/// out-neighbours of its earliest-placed in-neighbour and is checked against
/// its other in-neighbours. With a degeneracy-ordered host at most
/// n * kappa^(|reachable| - 1) candidates are examined.
class ReachableEnumerator {
public:
    ReachableEnumerator(const OrientedGraph &gdir, const PatternDag &hdir, VertexId source);

    [[nodiscard]] auto reachable() const -> VertexMask { return reachable_; }

    /// visit(images) for every map; images[v] is meaningful for v in
    /// reachable(). Root images are restricted to [first_root, last_root).
    template <typename Visit>
    void for_each(Visit &&visit, VertexId first_root, VertexId last_root) const
    {
        std::array<VertexId, kMaxPatternSize> images{};
        for (VertexId root = first_root; root < last_root; ++root) {
            images[order_[0]] = root;
            extend(visit, images, 1);
        }
    }
    template <typename Visit>
    void for_each(Visit &&visit) const
    {
        for_each(visit, 0, gdir_->vertex_count());
    }

    [[nodiscard]] auto count() const -> std::uint64_t;

private:
    template <typename Visit>
    void extend(Visit &visit, std::array<VertexId, kMaxPatternSize> &images, std::size_t depth) const
    {
        if (depth == order_.size()) {
            visit(std::span<const VertexId>(images.data(), images.size()));
            return;
        }
        const auto v = order_[depth];
        const auto &checks = checks_[depth];
        for (auto candidate : gdir_->out_neighbours(images[anchor_[depth]])) {
            bool ok = true;
            for (auto u : checks)
                if (! gdir_->has_arc(images[u], candidate)) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            images[v] = candidate;
            extend(visit, images, depth + 1);
        }
    }

    const OrientedGraph *gdir_;
    VertexMask reachable_;
    std::vector<VertexId> order_;              // pattern vertices, source first
    std::vector<VertexId> anchor_;             // candidate parent per depth
    std::vector<std::vector<VertexId>> checks_; // other in-neighbours per depth
};

/// Functional form of ReachableEnumerator::for_each.
void enumerate_reachable_homs(const OrientedGraph &gdir, const PatternDag &hdir, VertexId source,
    const std::function<void(std::span<const VertexId>)> &visit);

/// |Hom(H-> -> G->)| from a validated width-1 decomposition.
///
/// The tree is rooted at the bag with the largest reachable set. Each node
/// enumerates maps of its reachable set, multiplies in the child tables
/// looked up by the images of the child separators, and accumulates into a
/// table keyed by the images of its own separator. Throws InvalidArgument if
/// the decomposition is invalid or wider than one.
[[nodiscard]] auto count_homs_decomposed(const OrientedGraph &gdir, const PatternDag &hdir,
    const DagTreeDecomposition &t) -> Count;

class HomTable;
/// Called once per non-root node with its finished table.
using TableObserver = std::function<void(int node, const HomTable &table)>;

[[nodiscard]] auto count_homs_decomposed(const OrientedGraph &gdir, const PatternDag &hdir,
    const DagTreeDecomposition &t, const TableObserver &observer) -> Count;

/// Every acyclic orientation of a pattern with its width-1 decomposition.
struct DtdPlan {
    struct Item {
        PatternDag dag;
        DagTreeDecomposition tree;
    };
    std::vector<Item> items;
};

/// Throws ClassificationError when the pattern's longest induced cycle is
/// 6 or more.
[[nodiscard]] auto make_dtd_plan(const Pattern &p) -> DtdPlan;

/// Sum over the plan's orientations of the decomposed directed counts.
[[nodiscard]] auto count_homs_dtd(const OrientedGraph &gdir, const DtdPlan &plan, unsigned threads = 1) -> Count;

struct CountResult {
    Count count;
    Engine engine_used = Engine::brute;
};

/// automatic picks dtd when the longest induced cycle is at most 5 and
/// brute otherwise.
[[nodiscard]] auto count_homs(const Graph &g, const Pattern &p, Engine engine = Engine::automatic,
    const CountOptions &options = {}) -> CountResult;

/// Disjoint, covering, nonempty vertex sets of a host graph.
class VertexPartition {
public:
    /// Throws InvalidArgument unless parts partition 0..vertex_count-1 into
    /// nonempty sets.
    VertexPartition(std::vector<std::vector<VertexId>> parts, VertexId vertex_count);

    [[nodiscard]] auto size() const -> std::size_t { return parts_.size(); }
    [[nodiscard]] auto parts() const -> const std::vector<std::vector<VertexId>> & { return parts_; }
    [[nodiscard]] auto part(std::size_t i) const -> const std::vector<VertexId> & { return parts_[i]; }
    [[nodiscard]] auto part_of(VertexId v) const -> std::size_t { return part_of_[v]; }

private:
    std::vector<std::vector<VertexId>> parts_;
    std::vector<std::size_t> part_of_;
};

/// Homomorphisms whose image meets every part, by inclusion-exclusion over
/// all 2^k subfamilies of parts. Throws InvalidArgument unless the partition
/// has exactly k parts.
[[nodiscard]] auto count_partitioned_homs(const Graph &g, const Pattern &p, const VertexPartition &partition,
    Engine engine = Engine::automatic, const CountOptions &options = {}) -> Count;

/// Partitioned homomorphisms divided exactly by |Aut(H)|.
[[nodiscard]] auto count_partitioned_matches(const Graph &g, const Pattern &p, const VertexPartition &partition,
    Engine engine = Engine::automatic, const CountOptions &options = {}) -> Count;

} // namespace homcount
