#include <zfcube/arc_set.hpp>
#include <zfcube/errors.hpp>

#include <algorithm>
#include <functional>
#include <queue>

namespace zfcube {

ArcSet::ArcSet(GraphPtr host, std::vector<Arc> arcs) :
    host_(std::move(host)),
    arcs_(std::move(arcs))
{
    if (! host_)
        throw DomainError("arc set needs a host graph");
    auto n = host_->order();
    for (auto & a : arcs_)
        if (a.tail >= n || a.head >= n)
            throw DomainError("arc endpoint out of range");
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

    out_degree_.assign(n, 0);
    in_degree_.assign(n, 0);
    in_from_.assign(n, 0);
    for (auto & a : arcs_) {
        ++out_degree_[a.tail];
        ++in_degree_[a.head];
        in_from_[a.head] = a.tail;
    }
}

auto ArcSet::contains(VertexId tail, VertexId head) const -> bool
{
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

auto ArcSet::out_degree(VertexId v) const -> std::size_t
{
    return out_degree_.at(v);
}

auto ArcSet::in_degree(VertexId v) const -> std::size_t
{
    return in_degree_.at(v);
}

auto ArcSet::successor(VertexId v) const -> std::optional<VertexId>
{
    if (out_degree(v) != 1)
        return std::nullopt;
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{v, 0});
    return it->head;
}

auto ArcSet::predecessor(VertexId v) const -> std::optional<VertexId>
{
    if (in_degree(v) != 1)
        return std::nullopt;
    return in_from_[v];
}

auto ArcSet::operator==(const ArcSet & other) const -> bool
{
    return arcs_ == other.arcs_ && (host_ == other.host_ || *host_ == *other.host_);
}

auto ArcViolation::describe(const Graph & host) const -> std::string
{
    auto pair = "(" + host.label(arc.tail) + "," + host.label(arc.head) + ")";
    switch (kind) {
    case Kind::NotAnEdge: return pair + " is not an edge of the host";
    case Kind::BothOrientations: return pair + " appears in both orientations";
    }
    return pair;
}

auto validate(const ArcSet & f) -> std::vector<ArcViolation>
{
    std::vector<ArcViolation> result;
    for (auto & a : f.arcs()) {
        if (! f.host().adjacent(a.tail, a.head))
            result.push_back({a, ArcViolation::Kind::NotAnEdge});
        else if (f.contains(a.head, a.tail))
            result.push_back({a, ArcViolation::Kind::BothOrientations});
    }
    return result;
}

void require_dipath_forest(const ArcSet & f)
{
    auto n = f.host().order();
    for (VertexId v = 0; v < n; ++v) {
        if (f.out_degree(v) > 1)
            throw StructureError("vertex " + f.host().label(v) + " has " + std::to_string(f.out_degree(v)) + " out-arcs", v);
        if (f.in_degree(v) > 1)
            throw StructureError("vertex " + f.host().label(v) + " has " + std::to_string(f.in_degree(v)) + " in-arcs", v);
    }

    std::vector<char> seen(n, 0);
    for (VertexId v = 0; v < n; ++v)
        if (f.in_degree(v) == 0)
            for (std::optional<VertexId> c = v; c; c = f.successor(*c))
                seen[*c] = 1;
    for (VertexId v = 0; v < n; ++v)
        if (! seen[v])
            throw StructureError("vertex " + f.host().label(v) + " lies on a directed cycle of arcs", v);
}

auto is_dipath_forest(const ArcSet & f) -> bool
{
    try {
        require_dipath_forest(f);
        return true;
    }
    catch (const StructureError &) {
        return false;
    }
}

auto ChainDecomposition::initial_vertices() const -> VertexSet
{
    VertexSet result;
    for (auto & c : chains)
        result.push_back(c.front());
    return make_vertex_set(std::move(result));
}

auto ChainDecomposition::arc_count_census() const -> std::vector<std::size_t>
{
    std::vector<std::size_t> counts;
    for (auto & c : chains) {
        auto arcs = c.size() - 1;
        if (counts.size() <= arcs)
            counts.resize(arcs + 1, 0);
        ++counts[arcs];
    }
    return counts;
}

auto decompose(const ArcSet & f) -> ChainDecomposition
{
    require_dipath_forest(f);
    ChainDecomposition result;
    for (VertexId v = 0; v < f.host().order(); ++v)
        if (f.in_degree(v) == 0) {
            auto & chain = result.chains.emplace_back();
            for (std::optional<VertexId> c = v; c; c = f.successor(*c))
                chain.push_back(*c);
        }
    return result;
}

auto execute_arcs(const ArcSet & f) -> ArcExecution
{
    require_dipath_forest(f);
    if (auto violations = validate(f); ! violations.empty())
        throw DomainError("not an arc set: " + violations.front().describe(f.host()));

    const auto & g = f.host();
    auto n = g.order();
    std::vector<char> blue(n, 0);
    for (VertexId v = 0; v < n; ++v)
        blue[v] = f.in_degree(v) == 0;

    std::vector<std::size_t> white(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for (auto w : g.neighbours(v))
            if (! blue[w])
                ++white[v];

    auto performable = [&](VertexId u) {
        if (! blue[u] || white[u] != 1)
            return false;
        auto s = f.successor(u);
        return s && ! blue[*s];
    };

    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (performable(v))
            ready.push(v);

    ArcExecution result;
    while (! ready.empty()) {
        auto u = ready.top();
        ready.pop();
        if (! performable(u))
            continue;
        auto v = *f.successor(u);
        blue[v] = 1;
        result.performed.push_back({u, v});
        for (auto w : g.neighbours(v)) {
            --white[w];
            if (performable(w))
                ready.push(w);
        }
        if (performable(v))
            ready.push(v);
    }
    result.complete = result.performed.size() == f.size();
    return result;
}

auto is_forcing_arc_set(const ArcSet & f) -> bool
{
    return execute_arcs(f).complete;
}

auto product_arcset(const ArcSet & f, const Graph & h) -> ArcSet
{
    if (! is_forcing_arc_set(f))
        throw DomainError("product lift requires a forcing arc set");

    auto product = share(cartesian_product(f.host(), h));
    auto hn = static_cast<VertexId>(h.order());
    std::vector<Arc> arcs;
    arcs.reserve(f.size() * hn);
    for (auto & a : f.arcs())
        for (VertexId x = 0; x < hn; ++x)
            arcs.push_back({a.tail * hn + x, a.head * hn + x});
    return ArcSet(std::move(product), std::move(arcs));
}

}
