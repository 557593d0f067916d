#pragma once

#include <homcount/pattern.hpp>

#include <array>
#include <string>
#include <vector>

namespace homcount {

/// Evidence that a pattern has DAG treewidth at least two: an orientation
/// whose unique reachability graph over all its sources contains a triangle.
struct HardnessCertificate {
    EdgeMask orientation = 0;
    /// The long induced cycle used, in traversal order.
    std::vector<VertexId> cycle;
    std::array<VertexId, 3> sources{};
    /// witnesses[i] is reachable from exactly sources[i] and sources[(i+1)%3].
    std::array<VertexId, 3> witnesses{};
};

/// Orients the canonical longest induced cycle C (length r = 3l + q) with
/// sources at cycle positions 1, l+1, 2l+1 and sinks right after each of
/// them, cycle edges pointing from sources towards sinks. Edges leaving C
/// point away from it; edges off C follow ascending vertex id. The
/// resulting triangle is checked against the unique reachability graph
/// before returning.
///
/// Throws InvalidArgument if the longest induced cycle is shorter than 6.
[[nodiscard]] auto hardness_certificate(const Pattern &p) -> HardnessCertificate;

/// Re-derives the unique reachability graph on all sources and checks the
/// declared triangle and witnesses.
[[nodiscard]] auto verify_certificate(const Pattern &p, const HardnessCertificate &cert) -> bool;

[[nodiscard]] auto certificate_to_dot(const Pattern &p, const HardnessCertificate &cert) -> std::string;

} // namespace homcount
