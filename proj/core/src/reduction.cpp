#include <homcount/errors.hpp>
#include <homcount/reduction.hpp>

#include <algorithm>

namespace homcount {

auto gadget_parameters(int k, int r) -> GadgetParameters
{
    if (r < 6)
        throw InvalidArgument("gadget needs an induced cycle of length >= 6, got " + std::to_string(r));
    if (k < r)
        throw InvalidArgument("pattern size " + std::to_string(k) + " is below cycle length " + std::to_string(r));
    GadgetParameters params;
    params.k = k;
    params.r = r;
    params.ell = r / 3;
    params.q = r % 3;
    params.path_lengths = {params.ell, params.ell + params.q / 2, params.ell + (params.q + 1) / 2};
    return params;
}

auto ReductionInstance::auxiliary_count() const -> std::size_t
{
    return 2 * host_edges * static_cast<std::size_t>(params.r - 3);
}

auto ReductionInstance::within_size_bound() const -> bool
{
    const auto bound = 6 * host_edges * static_cast<std::size_t>(params.ell) + 3 * std::size_t{host_vertices} +
        static_cast<std::size_t>(params.k);
    return gadget.vertex_count() < bound;
}

auto build_gadget(const Graph &g, const Pattern &p) -> ReductionInstance
{
    ReductionInstance inst;
    inst.params = gadget_parameters(p.size(), p.longest_induced_cycle());
    const auto &params = inst.params;
    const auto n = g.vertex_count();
    const auto host_edges = g.edges();
    const auto m = host_edges.size();
    inst.host_vertices = n;
    inst.host_edges = m;

    inst.cycle = canonical_longest_induced_cycle(p.graph());
    std::vector<std::size_t> fixed_index(static_cast<std::size_t>(p.size()), SIZE_MAX);
    {
        VertexMask on_cycle = 0;
        for (auto v : inst.cycle)
            on_cycle |= VertexMask{1} << v;
        for (VertexId v = 0; v < static_cast<VertexId>(p.size()); ++v)
            if (! ((on_cycle >> v) & 1U)) {
                fixed_index[v] = inst.off_cycle.size();
                inst.off_cycle.push_back(v);
            }
    }

    const auto fixed_count = static_cast<VertexId>(inst.off_cycle.size());
    const auto core_base = fixed_count;
    const auto aux_base = core_base + 3 * n;
    auto core = [&](int part, VertexId u) { return core_base + static_cast<VertexId>(part) * n + u; };

    // interior path vertices per pair, in layout order
    std::array<std::size_t, 3> depth{}, pair_base{};
    std::size_t next = aux_base;
    for (std::size_t pair = 0; pair < 3; ++pair) {
        depth[pair] = static_cast<std::size_t>(params.path_lengths[pair] - 1);
        pair_base[pair] = next;
        next += 2 * m * depth[pair];
    }
    const auto total = static_cast<VertexId>(next);
    auto aux = [&](std::size_t pair, std::size_t e, std::size_t role, std::size_t t) {
        return static_cast<VertexId>(pair_base[pair] + (e * 2 + role) * depth[pair] + (t - 1));
    };

    std::vector<Edge> edges;
    for (const auto &[u, v] : p.edges())
        if (fixed_index[u] != SIZE_MAX && fixed_index[v] != SIZE_MAX)
            edges.emplace_back(static_cast<VertexId>(fixed_index[u]), static_cast<VertexId>(fixed_index[v]));

    static constexpr std::array<std::array<int, 2>, 3> pair_parts{{{0, 1}, {1, 2}, {0, 2}}};
    for (std::size_t pair = 0; pair < 3; ++pair) {
        const auto [a, b] = pair_parts[pair];
        for (std::size_t e = 0; e < m; ++e) {
            const auto [ui, uj] = host_edges[e];
            const std::array<std::array<VertexId, 2>, 2> ends{{{ui, uj}, {uj, ui}}};
            for (std::size_t role = 0; role < 2; ++role) {
                VertexId prev = core(a, ends[role][0]);
                for (std::size_t t = 1; t <= depth[pair]; ++t) {
                    auto cur = aux(pair, e, role, t);
                    edges.emplace_back(prev, cur);
                    prev = cur;
                }
                edges.emplace_back(prev, core(b, ends[role][1]));
            }
        }
    }

    for (VertexId i = 0; i < fixed_count; ++i)
        inst.fixed_set.push_back(i);
    for (int part = 0; part < 3; ++part)
        for (VertexId u = 0; u < n; ++u)
            inst.core_parts[static_cast<std::size_t>(part)].push_back(core(part, u));
    for (std::size_t pair = 0; pair < 3; ++pair) {
        inst.aux_slices[pair].resize(depth[pair]);
        for (std::size_t t = 1; t <= depth[pair]; ++t)
            for (std::size_t e = 0; e < m; ++e)
                for (std::size_t role = 0; role < 2; ++role)
                    inst.aux_slices[pair][t - 1].push_back(aux(pair, e, role, t));
    }

    // walk C from a_{k-r+1}; the 1-3 stretch runs from V3 back towards V1
    const auto [l12, l23, l13] = params.path_lengths;
    inst.parts.resize(static_cast<std::size_t>(p.size()));
    inst.bridge_map.resize(inst.cycle.size());
    for (int pos = 0; pos < params.r; ++pos) {
        const auto v = inst.cycle[static_cast<std::size_t>(pos)];
        std::vector<VertexId> image;
        if (pos == 0)
            image = inst.core_parts[0];
        else if (pos < l12)
            image = inst.aux_slices[0][static_cast<std::size_t>(pos - 1)];
        else if (pos == l12)
            image = inst.core_parts[1];
        else if (pos < l12 + l23)
            image = inst.aux_slices[1][static_cast<std::size_t>(pos - l12 - 1)];
        else if (pos == l12 + l23)
            image = inst.core_parts[2];
        else
            image = inst.aux_slices[2][static_cast<std::size_t>(l13 - (pos - l12 - l23) - 1)];
        inst.parts[v] = std::move(image);
        inst.bridge_map[static_cast<std::size_t>(pos)] = v;
    }
    for (VertexId i = 0; i < fixed_count; ++i)
        inst.parts[inst.off_cycle[i]] = {i};

    for (const auto &[u, v] : p.edges()) {
        const bool u_fixed = fixed_index[u] != SIZE_MAX, v_fixed = fixed_index[v] != SIZE_MAX;
        if (u_fixed == v_fixed)
            continue;
        const auto on = u_fixed ? v : u;
        const auto z = static_cast<VertexId>(fixed_index[u_fixed ? u : v]);
        for (auto w : inst.parts[on])
            edges.emplace_back(z, w);
    }

    inst.gadget = Graph::from_edges(total, edges);
    return inst;
}

auto verify_gadget_degeneracy(const ReductionInstance &inst) -> GadgetDegeneracyCheck
{
    GadgetDegeneracyCheck check;
    check.bound = static_cast<std::size_t>(inst.params.k - inst.params.r + 2);

    std::vector<VertexId> order;
    order.reserve(inst.gadget.vertex_count());
    for (const auto &slices : inst.aux_slices)
        for (const auto &slice : slices)
            order.insert(order.end(), slice.begin(), slice.end());
    for (const auto &part : inst.core_parts)
        order.insert(order.end(), part.begin(), part.end());
    order.insert(order.end(), inst.fixed_set.begin(), inst.fixed_set.end());

    check.block_order_out_degree = OrientedGraph::orient(inst.gadget, order).max_out_degree();
    check.degeneracy = degeneracy_order(inst.gadget).kappa;
    check.ok = check.block_order_out_degree <= check.bound && check.degeneracy <= check.bound;
    return check;
}

auto count_triangles_via_reduction(const ReductionInstance &inst, const Pattern &p, const CountOptions &options)
    -> ReductionResult
{
    ReductionResult result;
    // an empty part admits no partitioned homomorphism
    if (std::any_of(inst.parts.begin(), inst.parts.end(), [](const auto &part) { return part.empty(); }))
        return result;

    const auto partition = inst.partition();
    result.partitioned_homs = count_partitioned_homs(inst.gadget, p, partition, Engine::brute, options);
    result.partitioned_matches = result.partitioned_homs.divide_exact(automorphism_count(p));
    result.triangles = result.partitioned_matches.divide_exact(Count{6});
    return result;
}

auto count_triangles_via_reduction(const Graph &g, const Pattern &p, const CountOptions &options) -> Count
{
    return count_triangles_via_reduction(build_gadget(g, p), p, options).triangles;
}

} // namespace homcount
