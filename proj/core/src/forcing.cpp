#include <zfcube/errors.hpp>
#include <zfcube/forcing.hpp>

#include <functional>
#include <queue>

namespace zfcube {

auto closure(const Graph & g, std::span<const VertexId> s) -> ClosureResult
{
    auto n = g.order();
    ClosureResult result;
    result.trace.initial = make_vertex_set({s.begin(), s.end()});

    std::vector<char> blue(n, 0);
    for (auto v : result.trace.initial) {
        if (v >= n)
            throw DomainError("vertex " + std::to_string(v) + " not in graph");
        blue[v] = 1;
    }

    // white[v] = number of white neighbours of v
    std::vector<std::size_t> white(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for (auto w : g.neighbours(v))
            if (! blue[w])
                ++white[v];

    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (auto v : result.trace.initial)
        if (white[v] == 1)
            ready.push(v);

    while (! ready.empty()) {
        auto u = ready.top();
        ready.pop();
        if (white[u] != 1)
            continue;

        VertexId target = 0;
        for (auto w : g.neighbours(u))
            if (! blue[w]) {
                target = w;
                break;
            }

        blue[target] = 1;
        result.trace.forces.push_back({u, target});
        for (auto w : g.neighbours(target)) {
            --white[w];
            if (blue[w] && white[w] == 1)
                ready.push(w);
        }
        if (white[target] == 1)
            ready.push(target);
    }

    for (VertexId v = 0; v < n; ++v)
        if (blue[v])
            result.derived.push_back(v);
    return result;
}

auto is_zero_forcing_set(const Graph & g, std::span<const VertexId> s) -> bool
{
    return closure(g, s).derived.size() == g.order();
}

auto check_trace(const Graph & g, const ForcingTrace & trace) -> std::string
{
    std::vector<char> blue(g.order(), 0);
    for (auto v : trace.initial) {
        if (v >= g.order())
            return "initial vertex " + std::to_string(v) + " not in graph";
        blue[v] = 1;
    }

    for (std::size_t i = 0; i < trace.forces.size(); ++i) {
        auto [u, v] = trace.forces[i];
        auto step = "force " + std::to_string(i) + " ";
        if (u >= g.order() || v >= g.order())
            return step + "names a vertex outside the graph";
        if (! blue[u])
            return step + "has a white forcer " + g.label(u);
        if (blue[v])
            return step + "targets " + g.label(v) + ", which is already blue";
        if (! g.adjacent(u, v))
            return step + "is not along an edge";
        for (auto w : g.neighbours(u))
            if (w != v && ! blue[w])
                return step + "has forcer " + g.label(u) + " with a second white neighbour " + g.label(w);
        blue[v] = 1;
    }
    return {};
}

auto trace_to_arcset(GraphPtr host, const ForcingTrace & trace) -> ArcSet
{
    std::vector<Arc> arcs;
    arcs.reserve(trace.forces.size());
    for (auto & f : trace.forces)
        arcs.push_back({f.forcer, f.forced});
    return ArcSet(std::move(host), std::move(arcs));
}

}
