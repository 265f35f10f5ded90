#include <zfcube/errors.hpp>
#include <zfcube/minority.hpp>

#include <algorithm>

namespace zfcube {

namespace {
    void check_dimension(int n)
    {
        if (n < min_minority_dimension)
            throw DomainError("minority cube needs dimension at least 3, got " + std::to_string(n));
        if (n > max_minority_dimension)
            throw ResourceError("minority cube dimension " + std::to_string(n) + " exceeds the guard of 12");
    }

    auto pow2(int e) -> VertexId
    {
        return VertexId{1} << e;
    }

    // The two (k-1)-bit strings swapped by the level-k matching:
    // 01 0^(k-4) 0 and 10 0^(k-4) 1.
    auto swapped_pair(int k) -> std::pair<VertexId, VertexId>
    {
        return {pow2(k - 3), pow2(k - 2) + 1};
    }

    auto level_matching(int k) -> std::vector<VertexId>
    {
        auto m = identity_matching(k - 1);
        if (k >= 4) {
            auto [p, q] = swapped_pair(k);
            std::swap(m[p], m[q]);
        }
        return m;
    }
}

auto minority_twist_spec(int n) -> TwistSpec
{
    check_dimension(n);
    std::vector<std::vector<VertexId>> levels;
    for (int k = 1; k <= n; ++k)
        levels.push_back(level_matching(k));
    return TwistSpec::uniform(levels);
}

auto build_minority_recursive(int n) -> MinorityCube
{
    check_dimension(n);

    auto q3 = build_hypercube(3);
    std::vector<Edge> edges(q3.edges().begin(), q3.edges().end());
    std::vector<Arc> arcs{{0b000, 0b100}, {0b100, 0b110}, {0b001, 0b101}, {0b101, 0b111}};
    std::optional<Arc> bridge;
    std::vector<Edge> level_twisted;

    for (int k = 4; k <= n; ++k) {
        std::vector<Edge> next_edges;
        next_edges.reserve(2 * edges.size() + pow2(k - 1));
        for (int copy = 0; copy < 2; ++copy)
            for (auto & e : edges)
                next_edges.push_back({2 * e.u + static_cast<VertexId>(copy), 2 * e.v + static_cast<VertexId>(copy)});

        auto [p, q] = swapped_pair(k);
        for (VertexId a = 0; a < pow2(k - 1); ++a) {
            VertexId b = a == p ? q : a == q ? p : a;
            next_edges.push_back({2 * a, 2 * b + 1});
        }
        level_twisted = {{2 * p, 2 * q + 1}, {2 * q, 2 * p + 1}};
        for (auto & e : level_twisted)
            if (e.u > e.v)
                std::swap(e.u, e.v);
        std::sort(level_twisted.begin(), level_twisted.end());

        std::vector<Arc> next_arcs;
        next_arcs.reserve(2 * arcs.size() + 1);
        for (int copy = 0; copy < 2; ++copy)
            for (auto & a : arcs)
                next_arcs.push_back({2 * a.tail + static_cast<VertexId>(copy), 2 * a.head + static_cast<VertexId>(copy)});
        // 01 0^(k-4) 10 -> 01 0^(k-4) 11
        bridge = Arc{pow2(k - 2) + 2, pow2(k - 2) + 3};
        next_arcs.push_back(*bridge);

        edges = std::move(next_edges);
        arcs = std::move(next_arcs);
    }

    auto graph = share(Graph::cube(n, std::move(edges)));
    auto all_twisted = twisted_edges(*graph);
    return MinorityCube{
        n,
        minority_twist_spec(n),
        ArcSet(std::move(graph), std::move(arcs)),
        bridge,
        std::move(level_twisted),
        std::move(all_twisted)};
}

auto build_minority_closed_form(int n) -> ArcSet
{
    check_dimension(n);
    std::vector<Arc> arcs;

    // 00a -> 10a -> 11a
    for (VertexId a = 0; a < pow2(n - 2); ++a) {
        arcs.push_back({a, pow2(n - 1) + a});
        arcs.push_back({pow2(n - 1) + a, pow2(n - 1) + pow2(n - 2) + a});
    }

    // 01 0^k 10 b -> 01 0^k 11 b
    for (int k = 0; k <= n - 4; ++k)
        for (VertexId b = 0; b < pow2(n - k - 4); ++b) {
            VertexId tail = pow2(n - 2) + pow2(n - 3 - k) + b;
            arcs.push_back({tail, tail + pow2(n - 4 - k)});
        }

    return ArcSet(share(build_twisted(minority_twist_spec(n))), std::move(arcs));
}

auto to_string(VertexClass c) -> const char *
{
    switch (c) {
    case VertexClass::c00: return "00";
    case VertexClass::c01: return "01";
    case VertexClass::c10: return "10";
    case VertexClass::c11: return "11";
    }
    return "??";
}

auto classify(const BitVertex & v) -> VertexClass
{
    if (v.length() < 2)
        throw DomainError("vertex class needs at least two bits");
    return static_cast<VertexClass>(v.bit(0) * 2 + v.bit(1));
}

namespace {
    // For a 01-vertex, the position of the first 1 after the class prefix,
    // or length() if there is none.
    auto first_one_after_prefix(const BitVertex & v) -> int
    {
        int p = 2;
        while (p < v.length() && v.bit(p) == 0)
            ++p;
        return p;
    }

    void check_length(const BitVertex & v)
    {
        if (v.length() < min_minority_dimension)
            throw DomainError("minority arc queries need at least three bits");
    }
}

auto has_out_arc(const BitVertex & v) -> bool
{
    check_length(v);
    switch (classify(v)) {
    case VertexClass::c00:
    case VertexClass::c10: return true;
    case VertexClass::c11: return false;
    case VertexClass::c01: {
        auto p = first_one_after_prefix(v);
        return p <= v.length() - 2 && v.bit(p + 1) == 0;
    }
    }
    return false;
}

auto has_in_arc(const BitVertex & v) -> bool
{
    check_length(v);
    switch (classify(v)) {
    case VertexClass::c00: return false;
    case VertexClass::c10:
    case VertexClass::c11: return true;
    case VertexClass::c01: {
        auto p = first_one_after_prefix(v);
        return p <= v.length() - 2 && v.bit(p + 1) == 1;
    }
    }
    return false;
}

auto minority_isolated_vertices(int n) -> std::vector<BitVertex>
{
    check_dimension(n);
    return {BitVertex(pow2(n - 2), n), BitVertex(pow2(n - 2) + 1, n)};
}

auto minority_zero_forcing_set(int n) -> VertexSet
{
    return decompose(build_minority_recursive(n).arcs).initial_vertices();
}

}
