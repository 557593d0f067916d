#include <homcount/hom_count.hpp>
#include <homcount/hom_table.hpp>

#include <algorithm>
#include <thread>

namespace homcount {

auto engine_name(Engine e) -> std::string_view
{
    switch (e) {
    case Engine::automatic: return "auto";
    case Engine::dtd: return "dtd";
    case Engine::brute: return "brute";
    }
    return "unknown";
}

auto parse_engine(std::string_view name) -> Engine
{
    if (name == "auto")
        return Engine::automatic;
    if (name == "dtd")
        return Engine::dtd;
    if (name == "brute")
        return Engine::brute;
    throw InvalidArgument("unknown engine '" + std::string(name) + "' (expected auto, dtd or brute)");
}

ClassificationError::ClassificationError(int licl, HardnessCertificate certificate) :
    HomcountError("pattern has longest induced cycle " + std::to_string(licl) +
        " >= 6, so it has an orientation of DAG treewidth >= 2 and no width-1 decomposition"),
    licl_(licl),
    certificate_(std::move(certificate))
{
}

namespace {

__extension__ typedef unsigned __int128 u128;

// Running sum kept in 128 bits until it would overflow.
class Accumulator {
public:
    void add(u128 v)
    {
        u128 sum;
        if (__builtin_add_overflow(fast_, v, &sum)) {
            flush();
            fast_ = v;
        }
        else
            fast_ = sum;
    }
    void add(const Count &c) { slow_ += c; }
    auto total() -> Count
    {
        flush();
        return slow_;
    }

private:
    void flush()
    {
        Count hi{static_cast<std::uint64_t>(fast_ >> 64)};
        hi *= Count{std::uint64_t{1} << 32};
        hi *= Count{std::uint64_t{1} << 32};
        slow_ += hi;
        slow_ += Count{static_cast<std::uint64_t>(fast_)};
        fast_ = 0;
    }

    u128 fast_ = 0;
    Count slow_;
};

// Adjacency test: bit matrix for small hosts, binary search otherwise.
class AdjacencyOracle {
public:
    explicit AdjacencyOracle(const Graph &g) : g_(g)
    {
        const auto n = g.vertex_count();
        if (n <= 8192) {
            words_ = (n + 63) / 64;
            bits_.assign(static_cast<std::size_t>(n) * words_, 0);
            for (VertexId u = 0; u < n; ++u)
                for (auto v : g.neighbours(u))
                    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        }
    }

    [[nodiscard]] auto adjacent(VertexId u, VertexId v) const -> bool
    {
        if (words_ != 0)
            return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
        return g_.has_edge(u, v);
    }

private:
    const Graph &g_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

class BruteCounter {
public:
    BruteCounter(const Graph &g, const Pattern &p, const BruteLimits &limits) :
        g_(g),
        p_(p),
        limits_(limits),
        adjacency_(g)
    {
        plan();
    }

    auto run() -> Count
    {
        if (p_.size() == 1)
            return Count{std::uint64_t{g_.vertex_count()}};
        for (VertexId root = 0; root < g_.vertex_count(); ++root) {
            images_[core_[0]] = root;
            tick();
            extend(1);
        }
        return total_.total();
    }

private:
    void plan()
    {
        const auto k = static_cast<VertexId>(p_.size());
        const VertexMask all = (VertexMask{1} << k) - 1;

        // deferred independent set: low degree first, core stays connected
        std::vector<VertexId> by_degree(k);
        for (VertexId v = 0; v < k; ++v)
            by_degree[v] = v;
        std::stable_sort(by_degree.begin(), by_degree.end(),
            [&](VertexId a, VertexId b) { return popcount(p_.neighbour_mask(a)) < popcount(p_.neighbour_mask(b)); });
        VertexMask deferred = 0;
        for (auto v : by_degree) {
            if ((p_.neighbour_mask(v) & deferred) != 0)
                continue;
            auto rest = all & ~deferred & ~(VertexMask{1} << v);
            if (rest == 0 || ! connected(rest))
                continue;
            deferred |= VertexMask{1} << v;
        }
        auto core_mask = all & ~deferred;

        // connectivity-respecting order over the core
        VertexMask placed = 0;
        while (placed != core_mask) {
            VertexId best = 0;
            int best_placed = -1, best_degree = -1;
            for (auto v : mask_members(core_mask & ~placed)) {
                int np = popcount(p_.neighbour_mask(v) & placed);
                int deg = popcount(p_.neighbour_mask(v));
                if (placed != 0 && np == 0)
                    continue;
                if (np > best_placed || (np == best_placed && deg > best_degree)) {
                    best = v;
                    best_placed = np;
                    best_degree = deg;
                }
            }
            core_.push_back(best);
            constraints_.push_back(mask_members(p_.neighbour_mask(best) & placed));
            placed |= VertexMask{1} << best;
        }
        for (auto d : mask_members(deferred))
            deferred_neighbours_.push_back(mask_members(p_.neighbour_mask(d)));
    }

    auto connected(VertexMask subset) const -> bool
    {
        VertexMask seen = subset & (~subset + 1), frontier = seen;
        while (frontier != 0) {
            VertexMask next = 0;
            for (auto v : mask_members(frontier))
                next |= p_.neighbour_mask(v) & subset;
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == subset;
    }

    void tick()
    {
        if (limits_.node_budget != 0 && ++nodes_ > limits_.node_budget)
            throw BudgetExceeded("brute-force search exceeded its node budget of " + std::to_string(limits_.node_budget));
    }

    auto accepts(const std::vector<VertexId> &constraints, VertexId candidate, VertexId anchor) const -> bool
    {
        for (auto u : constraints)
            if (u != anchor && ! adjacency_.adjacent(images_[u], candidate))
                return false;
        return true;
    }

    // |common neighbourhood of images of nbrs|
    auto common_neighbours(const std::vector<VertexId> &nbrs) const -> u128
    {
        VertexId smallest = nbrs[0];
        for (auto u : nbrs)
            if (g_.degree(images_[u]) < g_.degree(images_[smallest]))
                smallest = u;
        if (nbrs.size() == 1)
            return g_.degree(images_[smallest]);
        u128 count = 0;
        for (auto c : g_.neighbours(images_[smallest]))
            if (accepts(nbrs, c, smallest))
                ++count;
        return count;
    }

    auto leaf_weight() const -> u128
    {
        u128 product = 1;
        for (const auto &nbrs : deferred_neighbours_) {
            auto c = common_neighbours(nbrs);
            if (c == 0)
                return 0;
            u128 next;
            if (__builtin_mul_overflow(product, c, &next))
                throw SizeLimitError("brute-force leaf weight overflows 128 bits");
            product = next;
        }
        return product;
    }

    void extend(std::size_t depth)
    {
        if (depth == core_.size()) {
            total_.add(leaf_weight());
            return;
        }
        const auto &constraints = constraints_[depth];
        VertexId anchor = constraints[0];
        for (auto u : constraints)
            if (g_.degree(images_[u]) < g_.degree(images_[anchor]))
                anchor = u;

        const auto v = core_[depth];
        const bool last = depth + 1 == core_.size() && deferred_neighbours_.empty();
        u128 accepted = 0;
        for (auto candidate : g_.neighbours(images_[anchor])) {
            if (! accepts(constraints, candidate, anchor))
                continue;
            if (last) {
                ++accepted;
                continue;
            }
            images_[v] = candidate;
            tick();
            extend(depth + 1);
        }
        if (last)
            total_.add(accepted);
    }

    const Graph &g_;
    const Pattern &p_;
    BruteLimits limits_;
    AdjacencyOracle adjacency_;
    std::vector<VertexId> core_;
    std::vector<std::vector<VertexId>> constraints_;
    std::vector<std::vector<VertexId>> deferred_neighbours_;
    std::array<VertexId, kMaxPatternSize> images_{};
    std::uint64_t nodes_ = 0;
    Accumulator total_;
};

} // namespace

auto count_homs_brute(const Graph &g, const Pattern &p, const BruteLimits &limits) -> Count
{
    if (limits.max_host_vertices != 0 && g.vertex_count() > limits.max_host_vertices)
        throw SizeLimitError("host has " + std::to_string(g.vertex_count()) + " vertices; brute-force oracle limit is " +
            std::to_string(limits.max_host_vertices));
    if (g.vertex_count() == 0)
        return Count{};
    return BruteCounter(g, p, limits).run();
}

auto count_directed_homs_brute(const OrientedGraph &gdir, const PatternDag &hdir) -> Count
{
    const auto k = static_cast<VertexId>(hdir.size());
    if (gdir.vertex_count() == 0)
        return Count{};

    // breadth-first over the underlying undirected pattern
    std::vector<VertexId> order{0};
    VertexMask placed = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        auto v = order[head];
        for (auto w : mask_members((hdir.out_mask(v) | hdir.in_mask(v)) & ~placed)) {
            order.push_back(w);
            placed |= VertexMask{1} << w;
        }
    }
    if (order.size() != k)
        throw InvalidArgument("pattern DAG is not weakly connected");

    // out-arc bit matrix for small hosts, binary search otherwise
    const auto n = gdir.vertex_count();
    const std::size_t words = n <= 8192 ? (n + 63) / 64 : 0;
    std::vector<std::uint64_t> arcs(static_cast<std::size_t>(n) * words);
    for (VertexId u = 0; words != 0 && u < n; ++u)
        for (auto v : gdir.out_neighbours(u))
            arcs[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    auto arc = [&](VertexId from, VertexId to) {
        if (words != 0)
            return ((arcs[from * words + to / 64] >> (to % 64)) & 1U) != 0;
        return gdir.has_arc(from, to);
    };

    std::array<VertexId, kMaxPatternSize> images{};
    Accumulator total;

    auto fits = [&](VertexId v, VertexId candidate, VertexMask assigned) {
        for (auto m = hdir.in_mask(v) & assigned; m != 0; m &= m - 1)
            if (! arc(images[std::countr_zero(m)], candidate))
                return false;
        for (auto m = hdir.out_mask(v) & assigned; m != 0; m &= m - 1)
            if (! arc(candidate, images[std::countr_zero(m)]))
                return false;
        return true;
    };

    auto extend = [&](auto &self, std::size_t depth, VertexMask assigned) -> void {
        const auto v = order[depth];
        // any assigned neighbour seeds the candidates
        auto around = (hdir.out_mask(v) | hdir.in_mask(v)) & assigned;
        auto anchor = static_cast<VertexId>(std::countr_zero(around));
        auto candidates = hdir.has_arc(anchor, v) ? gdir.out_neighbours(images[anchor]) : gdir.in_neighbours(images[anchor]);
        const bool last = depth + 1 == order.size();
        u128 accepted = 0;
        for (auto c : candidates) {
            if (! fits(v, c, assigned))
                continue;
            if (last) {
                ++accepted;
                continue;
            }
            images[v] = c;
            self(self, depth + 1, assigned | (VertexMask{1} << v));
        }
        total.add(accepted);
    };

    if (k == 1)
        return Count{std::uint64_t{gdir.vertex_count()}};
    for (VertexId root = 0; root < gdir.vertex_count(); ++root) {
        images[order[0]] = root;
        extend(extend, 1, VertexMask{1} << order[0]);
    }
    return total.total();
}

ReachableEnumerator::ReachableEnumerator(const OrientedGraph &gdir, const PatternDag &hdir, VertexId source) :
    gdir_(&gdir),
    reachable_(hdir.reachable(source))
{
    if (! hdir.is_source(source))
        throw InvalidArgument("enumeration root " + std::to_string(source) + " is not a source");

    std::vector<std::size_t> position(static_cast<std::size_t>(hdir.size()), SIZE_MAX);
    for (auto v : hdir.topological_order()) {
        if (! ((reachable_ >> v) & 1U))
            continue;
        position[v] = order_.size();
        order_.push_back(v);
        if (order_.size() == 1) {
            anchor_.push_back(v);
            checks_.emplace_back();
            continue;
        }
        auto parents = mask_members(hdir.in_mask(v) & reachable_);
        auto earliest = *std::min_element(parents.begin(), parents.end(),
            [&](VertexId a, VertexId b) { return position[a] < position[b]; });
        anchor_.push_back(earliest);
        std::vector<VertexId> others;
        for (auto u : parents)
            if (u != earliest)
                others.push_back(u);
        checks_.push_back(std::move(others));
    }
    if (order_.empty() || order_[0] != source)
        throw ConsistencyError("topological order does not start the reachable set at its source");
}

auto ReachableEnumerator::count() const -> std::uint64_t
{
    std::uint64_t n = 0;
    for_each([&](std::span<const VertexId>) { ++n; });
    return n;
}

void enumerate_reachable_homs(const OrientedGraph &gdir, const PatternDag &hdir, VertexId source,
    const std::function<void(std::span<const VertexId>)> &visit)
{
    ReachableEnumerator(gdir, hdir, source).for_each(visit);
}

auto count_homs_decomposed(const OrientedGraph &gdir, const PatternDag &hdir, const DagTreeDecomposition &t) -> Count
{
    return count_homs_decomposed(gdir, hdir, t, {});
}

auto count_homs_decomposed(const OrientedGraph &gdir, const PatternDag &hdir, const DagTreeDecomposition &t,
    const TableObserver &observer) -> Count
{
    if (t.width() != 1)
        throw InvalidArgument("decomposed counting needs a width-1 decomposition, got width " + std::to_string(t.width()));
    if (! validate_decomposition(hdir, t))
        throw InvalidArgument("invalid DAG tree decomposition");

    const auto rooted = root_decomposition(hdir, t);
    const auto n = static_cast<std::size_t>(t.node_count());
    std::vector<std::vector<VertexId>> separator(n);
    for (std::size_t i = 0; i < n; ++i)
        separator[i] = mask_members(rooted.separator[i]);

    std::vector<std::optional<HomTable>> tables(n);
    Accumulator root_total;

    for (int node : rooted.post_order) {
        const auto ni = static_cast<std::size_t>(node);
        const auto source = static_cast<VertexId>(std::countr_zero(t.bags[ni]));
        const auto &children = rooted.children[ni];
        const bool is_root = node == rooted.root;
        if (! is_root)
            tables[ni].emplace(separator[ni].size());
        HomTable *own = is_root ? nullptr : &*tables[ni];
        std::array<VertexId, kMaxPatternSize> key{};

        auto key_of = [&](std::span<const VertexId> images, const std::vector<VertexId> &sep) {
            for (std::size_t j = 0; j < sep.size(); ++j)
                key[j] = images[sep[j]];
            return std::span<const VertexId>(key.data(), sep.size());
        };

        ReachableEnumerator enumerator(gdir, hdir, source);
        enumerator.for_each([&](std::span<const VertexId> images) {
            Count product{1};
            for (int c : children) {
                const auto ci = static_cast<std::size_t>(c);
                const Count *entry = tables[ci]->find(key_of(images, separator[ci]));
                if (entry == nullptr)
                    return;
                product *= *entry;
            }
            if (is_root)
                root_total.add(product);
            else
                own->add(key_of(images, separator[ni]), product);
        });

        if (observer && own != nullptr)
            observer(node, *own);
        for (int c : children)
            tables[static_cast<std::size_t>(c)].reset();
    }
    return root_total.total();
}

auto make_dtd_plan(const Pattern &p) -> DtdPlan
{
    if (p.longest_induced_cycle() >= 6)
        throw ClassificationError(p.longest_induced_cycle(), hardness_certificate(p));
    DtdPlan plan;
    plan.items.reserve(p.orientations().size());
    for (const auto &dag : p.orientations()) {
        auto result = build_width1_decomposition(dag);
        if (auto *failure = std::get_if<DecompositionFailure>(&result))
            throw ConsistencyError("no width-1 decomposition (blocked at source set " +
                std::to_string(failure->blocking_subset) + ") for a pattern with longest induced cycle " +
                std::to_string(p.longest_induced_cycle()));
        plan.items.push_back({dag, std::get<DagTreeDecomposition>(std::move(result))});
    }
    return plan;
}

auto count_homs_dtd(const OrientedGraph &gdir, const DtdPlan &plan, unsigned threads) -> Count
{
    const auto workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(plan.items.size())));
    if (workers <= 1) {
        Count total;
        for (const auto &item : plan.items)
            total += count_homs_decomposed(gdir, item.dag, item.tree);
        return total;
    }

    // orientations are independent; exact addition makes the total schedule-free
    std::vector<Count> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < plan.items.size(); i += workers)
                        partial[w] += count_homs_decomposed(gdir, plan.items[i].dag, plan.items[i].tree);
                }
                catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    Count total;
    for (auto &c : partial)
        total += c;
    return total;
}

auto count_homs(const Graph &g, const Pattern &p, Engine engine, const CountOptions &options) -> CountResult
{
    if (engine == Engine::automatic)
        engine = p.longest_induced_cycle() <= 5 ? Engine::dtd : Engine::brute;

    if (engine == Engine::brute)
        return {count_homs_brute(g, p, options.brute), Engine::brute};

    auto plan = make_dtd_plan(p);
    auto order = degeneracy_order(g);
    auto gdir = OrientedGraph::orient(g, order.order);
    return {count_homs_dtd(gdir, plan, options.threads), Engine::dtd};
}

VertexPartition::VertexPartition(std::vector<std::vector<VertexId>> parts, VertexId vertex_count) :
    parts_(std::move(parts)),
    part_of_(vertex_count, SIZE_MAX)
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].empty())
            throw InvalidArgument("partition part " + std::to_string(i) + " is empty");
        for (auto v : parts_[i]) {
            if (v >= vertex_count)
                throw InvalidArgument("partition mentions vertex " + std::to_string(v) + " outside the host");
            if (part_of_[v] != SIZE_MAX)
                throw InvalidArgument("vertex " + std::to_string(v) + " appears in two partition parts");
            part_of_[v] = i;
        }
    }
    for (VertexId v = 0; v < vertex_count; ++v)
        if (part_of_[v] == SIZE_MAX)
            throw InvalidArgument("partition does not cover vertex " + std::to_string(v));
}

auto count_partitioned_homs(const Graph &g, const Pattern &p, const VertexPartition &partition, Engine engine,
    const CountOptions &options) -> Count
{
    const auto k = static_cast<std::size_t>(p.size());
    if (partition.size() != k)
        throw InvalidArgument("partition has " + std::to_string(partition.size()) + " parts but the pattern has " +
            std::to_string(k) + " vertices");

    Count positive, negative;
    std::vector<VertexId> removed;
    for (std::uint32_t family = 0; family < (std::uint32_t{1} << k); ++family) {
        removed.clear();
        for (std::size_t i = 0; i < k; ++i)
            if ((family >> i) & 1U)
                removed.insert(removed.end(), partition.part(i).begin(), partition.part(i).end());
        auto sub = delete_vertices(g, removed);
        auto homs = count_homs(sub.graph, p, engine, options).count;
        if (std::popcount(family) % 2 == 0)
            positive += homs;
        else
            negative += homs;
    }
    return positive - negative;
}

auto count_partitioned_matches(const Graph &g, const Pattern &p, const VertexPartition &partition, Engine engine,
    const CountOptions &options) -> Count
{
    return count_partitioned_homs(g, p, partition, engine, options).divide_exact(automorphism_count(p));
}

} // namespace homcount
