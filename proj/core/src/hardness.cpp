#include <homcount/errors.hpp>
#include <homcount/hardness.hpp>

#include <sstream>

namespace homcount {

auto hardness_certificate(const Pattern &p) -> HardnessCertificate
{
    const int r = p.longest_induced_cycle();
    if (r < 6)
        throw InvalidArgument("hardness certificate needs a longest induced cycle of length >= 6, got " + std::to_string(r));

    HardnessCertificate cert;
    cert.cycle = canonical_longest_induced_cycle(p.graph());
    const int ell = r / 3;
    const auto &cycle = cert.cycle;
    auto at = [&](int position) { return cycle[static_cast<std::size_t>(position % r)]; };

    // zero-based cycle positions of the three sources
    const std::array<int, 3> source_pos{0, ell, 2 * ell};

    VertexMask on_cycle = 0;
    for (auto v : cycle)
        on_cycle |= VertexMask{1} << v;

    // orientation decided per ordered pair, then packed into the edge mask
    std::vector<VertexMask> out(static_cast<std::size_t>(p.size()), 0);
    auto arc = [&](VertexId from, VertexId to) { out[from] |= VertexMask{1} << to; };

    for (int i = 0; i < 3; ++i) {
        const int s = source_pos[static_cast<std::size_t>(i)];
        const int next = (i == 2) ? r : source_pos[static_cast<std::size_t>(i + 1)];
        // s -> s+1 is the sink; the rest of the arc flows from the next source back to it
        arc(at(s), at(s + 1));
        for (int pos = next; pos > s + 1; --pos)
            arc(at(pos), at(pos - 1));
    }

    for (auto [u, v] : p.edges()) {
        bool u_on = (on_cycle >> u) & 1U, v_on = (on_cycle >> v) & 1U;
        if (u_on && v_on)
            continue;
        if (u_on)
            arc(u, v);
        else if (v_on)
            arc(v, u);
        else
            arc(u, v); // ascending id
    }

    const auto &edges = p.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if ((out[edges[e].first] >> edges[e].second) & 1U)
            cert.orientation |= EdgeMask{1} << e;

    for (int i = 0; i < 3; ++i) {
        cert.sources[static_cast<std::size_t>(i)] = at(source_pos[static_cast<std::size_t>(i)]);
        cert.witnesses[static_cast<std::size_t>(i)] = at(source_pos[static_cast<std::size_t>(i)] + 1);
    }

    if (! verify_certificate(p, cert))
        throw ConsistencyError("constructed orientation does not yield a unique reachability triangle");
    return cert;
}

auto verify_certificate(const Pattern &p, const HardnessCertificate &cert) -> bool
{
    PatternDag dag(p, cert.orientation);
    auto all = dag.source_mask();
    for (auto s : cert.sources)
        if (! dag.is_source(s))
            return false;
    auto ur = unique_reachability_graph(dag, all);
    for (int i = 0; i < 3; ++i) {
        auto a = cert.sources[static_cast<std::size_t>(i)];
        auto b = cert.sources[static_cast<std::size_t>((i + 1) % 3)];
        if (! ur.has_edge(a, b))
            return false;
        auto others = all & ~(VertexMask{1} << a) & ~(VertexMask{1} << b);
        auto unique = dag.reachable(a) & dag.reachable(b) & ~dag.reachable_from(others);
        if (! ((unique >> cert.witnesses[static_cast<std::size_t>(i)]) & 1U))
            return false;
    }
    return true;
}

auto certificate_to_dot(const Pattern &p, const HardnessCertificate &cert) -> std::string
{
    PatternDag dag(p, cert.orientation);
    std::ostringstream out;
    out << "digraph certificate {\n";
    for (VertexId v = 0; v < static_cast<VertexId>(p.size()); ++v) {
        out << "  v" << v << " [label=\"" << p.graph().label(v) << "\"";
        for (int i = 0; i < 3; ++i) {
            if (cert.sources[static_cast<std::size_t>(i)] == v)
                out << ", shape=box, xlabel=\"s" << i + 1 << "\"";
            if (cert.witnesses[static_cast<std::size_t>(i)] == v)
                out << ", shape=doublecircle, xlabel=\"t" << i + 1 << "\"";
        }
        out << "];\n";
    }
    for (VertexId v = 0; v < static_cast<VertexId>(p.size()); ++v)
        for (auto w : mask_members(dag.out_mask(v)))
            out << "  v" << v << " -> v" << w << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace homcount
