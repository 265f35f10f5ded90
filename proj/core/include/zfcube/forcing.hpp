#ifndef ZFCUBE_FORCING_HPP
#define ZFCUBE_FORCING_HPP

#include <zfcube/arc_set.hpp>
#include <zfcube/graph.hpp>

#include <span>
#include <string>
#include <vector>

namespace zfcube {

struct Force {
    VertexId forcer;
    VertexId forced;

    auto operator<=>(const Force &) const = default;
};

/// Chronological record of one run of the colour change rule.
struct ForcingTrace {
    VertexSet initial;
    std::vector<Force> forces;
};

struct ClosureResult {
    VertexSet derived;
    ForcingTrace trace;
};

/// Applies "a blue vertex with exactly one white neighbour turns that
/// neighbour blue" until nothing changes. Among the vertices able to force,
/// the one with the smallest id always goes first. Throws DomainError if s
/// names a vertex outside g.
auto closure(const Graph & g, std::span<const VertexId> s) -> ClosureResult;

auto is_zero_forcing_set(const Graph & g, std::span<const VertexId> s) -> bool;

/// Empty if the trace replays step by step on g (each forcer blue with the
/// forced vertex as its only white neighbour); otherwise a description of
/// the first bad step.
auto check_trace(const Graph & g, const ForcingTrace & trace) -> std::string;

/// The forces of a trace as arcs over host.
auto trace_to_arcset(GraphPtr host, const ForcingTrace & trace) -> ArcSet;

}

#endif
