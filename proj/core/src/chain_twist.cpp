#include <zfcube/arc_set.hpp>
#include <zfcube/errors.hpp>

#include <algorithm>
#include <stdexcept>

namespace zfcube {

namespace {
    void require_simple(const Graph & g, std::span<const VertexId> walk, bool closed, const char * what)
    {
        std::vector<char> seen(g.order(), 0);
        for (auto v : walk) {
            if (v >= g.order())
                throw DomainError(std::string(what) + " names a vertex outside the graph");
            if (seen[v])
                throw DomainError(std::string(what) + " repeats vertex " + g.label(v));
            seen[v] = 1;
        }
        auto steps = closed ? walk.size() : walk.size() - 1;
        for (std::size_t i = 0; i < steps; ++i) {
            auto u = walk[i], v = walk[(i + 1) % walk.size()];
            if (! g.adjacent(u, v))
                throw DomainError(std::string(what) + " steps along a non-edge " + g.label(u) + "-" + g.label(v));
        }
    }

    // Whether the cyclic vertex sequence has no two consecutive non-arc steps
    // and never immediately reverses the step it arrived on.
    auto is_twist_walk(const ArcSet & f, std::span<const VertexId> walk) -> bool
    {
        auto m = walk.size();
        if (m < 3)
            return false;
        for (std::size_t i = 0; i < m; ++i) {
            auto a = walk[i], b = walk[(i + 1) % m], c = walk[(i + 2) % m];
            if (a == c)
                return false;
            if (! f.contains(a, b) && ! f.contains(b, c))
                return false;
        }
        return true;
    }
}

auto is_chain_twist(const ArcSet & f, std::span<const VertexId> cycle) -> bool
{
    if (cycle.size() < 3)
        throw DomainError("a cycle needs at least 3 vertices");
    require_simple(f.host(), cycle, true, "cycle");

    auto k = cycle.size();
    std::vector<char> arc(k);
    for (std::size_t i = 0; i < k; ++i)
        arc[i] = f.contains(cycle[i], cycle[(i + 1) % k]);

    for (std::size_t i = 0; i < k; ++i)
        if (! arc[i] && (! arc[(i + k - 1) % k] || ! arc[(i + 1) % k]))
            return false;
    return true;
}

auto is_chain_twist_path(const ArcSet & f, std::span<const VertexId> path) -> bool
{
    if (path.size() < 2)
        throw DomainError("a path needs at least 2 vertices");
    require_simple(f.host(), path, false, "path");

    // step j joins path[j] and path[j + 1]; only steps leaving an interior
    // vertex are constrained, and a missing step after the end is vacuous
    auto steps = path.size() - 1;
    std::vector<char> arc(steps);
    for (std::size_t j = 0; j < steps; ++j)
        arc[j] = f.contains(path[j], path[j + 1]);

    for (std::size_t j = 1; j < steps; ++j)
        if (! arc[j] && (! arc[j - 1] || (j + 1 < steps && ! arc[j + 1])))
            return false;
    return true;
}

namespace {
    auto find_exhaustive(const ArcSet & f) -> std::optional<std::vector<VertexId>>
    {
        const auto & g = f.host();
        if (g.order() > max_exhaustive_twist_order)
            throw ResourceError("exhaustive chain twist search is limited to " + std::to_string(max_exhaustive_twist_order)
                + " vertices; use the walk detector");

        std::vector<VertexId> path;
        std::vector<char> on_path(g.order(), 0), step_is_arc;
        std::optional<std::vector<VertexId>> found;

        // Any prefix of a chain twist has no two consecutive non-arc steps,
        // so such prefixes are pruned. Closing cycles are checked in full.
        auto extend = [&](auto & self, VertexId start) -> void {
            auto v = path.back();
            for (auto w : g.neighbours(v)) {
                if (found)
                    return;
                bool arc = f.contains(v, w);
                if (! arc && ! step_is_arc.empty() && ! step_is_arc.back())
                    continue;
                if (w == start) {
                    if (path.size() >= 3 && is_chain_twist(f, path))
                        found = path;
                }
                else if (w > start && ! on_path[w]) {
                    on_path[w] = 1;
                    path.push_back(w);
                    step_is_arc.push_back(arc);
                    self(self, start);
                    step_is_arc.pop_back();
                    path.pop_back();
                    on_path[w] = 0;
                }
            }
        };

        for (VertexId s = 0; s < g.order() && ! found; ++s) {
            path.assign(1, s);
            step_is_arc.clear();
            on_path[s] = 1;
            extend(extend, s);
            on_path[s] = 0;
        }
        return found;
    }

    // Splits a closed twist walk at repeated vertices until it is simple.
    // For arc sets with in- and out-degree at most one, at least one of the
    // two closed walks obtained by splitting at a repeated vertex is again a
    // twist walk.
    auto reduce_to_cycle(const ArcSet & f, std::vector<VertexId> walk) -> std::vector<VertexId>
    {
        while (true) {
            std::vector<std::ptrdiff_t> last_seen(f.host().order(), -1);
            std::optional<std::pair<std::size_t, std::size_t>> repeat;
            for (std::size_t j = 0; j < walk.size() && ! repeat; ++j) {
                if (last_seen[walk[j]] >= 0)
                    repeat = std::pair{static_cast<std::size_t>(last_seen[walk[j]]), j};
                last_seen[walk[j]] = static_cast<std::ptrdiff_t>(j);
            }
            if (! repeat)
                return walk;

            auto [i, j] = *repeat;
            std::vector<VertexId> inner(walk.begin() + static_cast<std::ptrdiff_t>(i), walk.begin() + static_cast<std::ptrdiff_t>(j));
            std::vector<VertexId> outer(walk.begin() + static_cast<std::ptrdiff_t>(j), walk.end());
            outer.insert(outer.end(), walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(i));

            if (is_twist_walk(f, inner))
                walk = std::move(inner);
            else if (is_twist_walk(f, outer))
                walk = std::move(outer);
            else
                throw std::logic_error("closed twist walk could not be reduced");
        }
    }

    auto find_walk(const ArcSet & f) -> std::optional<std::vector<VertexId>>
    {
        const auto & g = f.host();
        auto n = g.order();
        for (VertexId v = 0; v < n; ++v)
            if (f.out_degree(v) > 1 || f.in_degree(v) > 1)
                throw StructureError("walk detector needs in- and out-degree at most one; vertex " + g.label(v) + " violates this", v);

        // state = directed edge (u, v), indexed by u's adjacency slot for v
        std::vector<std::size_t> base(n + 1, 0);
        for (VertexId v = 0; v < n; ++v)
            base[v + 1] = base[v] + g.degree(v);
        auto state_count = base[n];
        auto state_of = [&](VertexId u, VertexId v) {
            auto nb = g.neighbours(u);
            return base[u] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
        };
        std::vector<VertexId> tail_of(state_count), head_of(state_count);
        for (VertexId u = 0; u < n; ++u) {
            auto nb = g.neighbours(u);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                tail_of[base[u] + i] = u;
                head_of[base[u] + i] = nb[i];
            }
        }

        enum : char { unvisited, active, done };
        std::vector<char> colour(state_count, unvisited);
        struct Frame {
            std::size_t state;
            std::size_t next;
        };
        std::vector<Frame> stack;

        for (std::size_t root = 0; root < state_count; ++root) {
            if (colour[root] != unvisited)
                continue;
            colour[root] = active;
            stack.push_back({root, 0});
            while (! stack.empty()) {
                auto & top = stack.back();
                auto u = tail_of[top.state], v = head_of[top.state];
                bool arrived_on_arc = f.contains(u, v);
                auto nb = g.neighbours(v);
                bool pushed = false;
                while (top.next < nb.size()) {
                    auto w = nb[top.next++];
                    if (w == u || ! (arrived_on_arc || f.contains(v, w)))
                        continue;
                    auto s = state_of(v, w);
                    if (colour[s] == active) {
                        std::vector<VertexId> walk;
                        auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame & fr) { return fr.state == s; });
                        for (; it != stack.end(); ++it)
                            walk.push_back(tail_of[it->state]);
                        auto cycle = reduce_to_cycle(f, std::move(walk));
                        if (! is_chain_twist(f, cycle))
                            throw std::logic_error("reduced walk is not a chain twist");
                        return cycle;
                    }
                    if (colour[s] == unvisited) {
                        colour[s] = active;
                        stack.push_back({s, 0});
                        pushed = true;
                        break;
                    }
                }
                if (! pushed) {
                    colour[stack.back().state] = done;
                    stack.pop_back();
                }
            }
        }
        return std::nullopt;
    }
}

auto find_chain_twist(const ArcSet & f, TwistDetector detector) -> std::optional<std::vector<VertexId>>
{
    switch (detector) {
    case TwistDetector::exhaustive: return find_exhaustive(f);
    case TwistDetector::walk: return find_walk(f);
    }
    return std::nullopt;
}

}
