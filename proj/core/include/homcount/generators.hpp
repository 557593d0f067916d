#pragma once

#include <homcount/graph.hpp>

#include <cstdint>
#include <vector>

namespace homcount {

[[nodiscard]] auto cycle_graph(VertexId n) -> Graph;
[[nodiscard]] auto complete_graph(VertexId n) -> Graph;
[[nodiscard]] auto path_graph(VertexId n) -> Graph;
/// K_{1,leaves}; the centre is vertex 0.
[[nodiscard]] auto star_graph(VertexId leaves) -> Graph;
/// Triangle 0-1-2 with pendant vertices 3 (on 0) and 4 (on 1).
[[nodiscard]] auto bull_graph() -> Graph;

/// Eight-vertex pattern with longest induced cycle 6: the cycle a3..a8 and
/// two adjacent vertices a1, a2 each joined to a3, a5 and a7. Labels a1..a8
/// map to ids 0..7.
[[nodiscard]] auto two_apex_hexagon() -> Graph;

/// Erdos-Renyi G(n, p).
[[nodiscard]] auto random_gnp(VertexId n, double p, std::uint64_t seed) -> Graph;

/// Vertex i joins min(c, i) distinct random earlier vertices, so the
/// degeneracy is at most c.
[[nodiscard]] auto random_bounded_degeneracy(VertexId n, unsigned c, std::uint64_t seed) -> Graph;

/// Bounded-degeneracy host with roughly the requested edge count.
[[nodiscard]] auto bench_host(std::size_t target_edges, unsigned c, std::uint64_t seed) -> Graph;

/// One representative of every connected graph on k vertices up to
/// isomorphism, k <= 8.
[[nodiscard]] auto connected_graphs(VertexId k) -> std::vector<Graph>;

} // namespace homcount
