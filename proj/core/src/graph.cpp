#include <zfcube/errors.hpp>
#include <zfcube/graph.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace zfcube {

BitVertex::BitVertex(VertexId id, int length) :
    id_(id),
    length_(length)
{
    if (length < 0 || length > 31)
        throw DomainError("bit string length " + std::to_string(length) + " out of range");
    if (length < 32 && (static_cast<std::uint64_t>(id) >> length) != 0)
        throw DomainError("id " + std::to_string(id) + " does not fit in " + std::to_string(length) + " bits");
}

auto BitVertex::parse(std::string_view text) -> BitVertex
{
    if (text.size() > 31)
        throw DomainError("bit string too long: " + std::string(text));
    VertexId id = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw DomainError("not a bit string: '" + std::string(text) + "'");
        id = (id << 1) | static_cast<VertexId>(c - '0');
    }
    return BitVertex(id, static_cast<int>(text.size()));
}

auto BitVertex::bit(int i) const -> int
{
    if (i < 0 || i >= length_)
        throw DomainError("bit position " + std::to_string(i) + " out of range");
    return static_cast<int>((id_ >> (length_ - 1 - i)) & 1U);
}

auto BitVertex::append(int b) const -> BitVertex
{
    return BitVertex((id_ << 1) | static_cast<VertexId>(b & 1), length_ + 1);
}

auto BitVertex::drop_last() const -> BitVertex
{
    if (length_ == 0)
        throw DomainError("cannot drop a bit from the empty string");
    return BitVertex(id_ >> 1, length_ - 1);
}

auto BitVertex::str() const -> std::string
{
    std::string result(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
        if ((id_ >> (length_ - 1 - i)) & 1U)
            result[static_cast<std::size_t>(i)] = '1';
    return result;
}

auto hamming_distance(const BitVertex & a, const BitVertex & b) -> int
{
    if (a.length() != b.length())
        throw DomainError("hamming distance of bit strings with different lengths");
    return std::popcount(a.id() ^ b.id());
}

auto make_vertex_set(std::vector<VertexId> ids) -> VertexSet
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

namespace {
    void normalise_edges(std::vector<Edge> & edges, std::size_t order)
    {
        for (auto & e : edges) {
            if (e.u >= order || e.v >= order)
                throw ValidationError("edge endpoint out of range");
            if (e.u == e.v)
                throw ValidationError("loop at vertex " + std::to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
}

auto Graph::cube(int dimension, std::vector<Edge> edges) -> Graph
{
    if (dimension < 0)
        throw DomainError("negative dimension");
    if (dimension > max_construct_dimension)
        throw ResourceError("dimension " + std::to_string(dimension) + " exceeds the construction guard of " + std::to_string(max_construct_dimension));

    Graph g;
    g.dimension_ = dimension;
    g.edges_ = std::move(edges);
    normalise_edges(g.edges_, std::size_t{1} << dimension);
    g.offsets_.assign((std::size_t{1} << dimension) + 1, 0);
    g.build_adjacency();
    return g;
}

auto Graph::labelled(std::vector<std::string> labels, std::vector<Edge> edges) -> Graph
{
    if (labels.empty())
        throw DomainError("graph must have at least one vertex");

    Graph g;
    g.labels_ = std::move(labels);
    for (std::size_t i = 0; i < g.labels_.size(); ++i)
        if (! g.label_index_.emplace(g.labels_[i], static_cast<VertexId>(i)).second)
            throw ValidationError("duplicate vertex label '" + g.labels_[i] + "'");
    g.edges_ = std::move(edges);
    normalise_edges(g.edges_, g.labels_.size());
    g.offsets_.assign(g.labels_.size() + 1, 0);
    g.build_adjacency();
    return g;
}

auto Graph::on_vertices(std::size_t order, std::vector<Edge> edges) -> Graph
{
    std::vector<std::string> labels(order);
    for (std::size_t i = 0; i < order; ++i)
        labels[i] = std::to_string(i);
    return labelled(std::move(labels), std::move(edges));
}

void Graph::build_adjacency()
{
    auto n = offsets_.size() - 1;
    std::vector<std::size_t> degree(n, 0);
    for (auto & e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_[0] = 0;
    for (std::size_t v = 0; v < n; ++v)
        offsets_[v + 1] = offsets_[v] + degree[v];

    targets_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto & e : edges_) {
        targets_[fill[e.u]++] = e.v;
        targets_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
            targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

auto Graph::label(VertexId v) const -> std::string
{
    if (v >= order())
        throw DomainError("vertex " + std::to_string(v) + " not in graph");
    if (dimension_)
        return BitVertex(v, *dimension_).str();
    return labels_[v];
}

auto Graph::find(std::string_view label) const -> std::optional<VertexId>
{
    if (dimension_) {
        if (label.size() != static_cast<std::size_t>(*dimension_))
            return std::nullopt;
        if (! std::all_of(label.begin(), label.end(), [](char c) { return c == '0' || c == '1'; }))
            return std::nullopt;
        return BitVertex::parse(label).id();
    }
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

auto Graph::neighbours(VertexId v) const -> std::span<const VertexId>
{
    if (v >= order())
        throw DomainError("vertex " + std::to_string(v) + " not in graph");
    return std::span<const VertexId>(targets_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

auto Graph::degree(VertexId v) const -> std::size_t
{
    return neighbours(v).size();
}

auto Graph::adjacent(VertexId u, VertexId v) const -> bool
{
    auto n = neighbours(u);
    return std::binary_search(n.begin(), n.end(), v);
}

auto Graph::min_degree() const -> std::size_t
{
    std::size_t best = order() > 0 ? degree(0) : 0;
    for (VertexId v = 0; v < order(); ++v)
        best = std::min(best, degree(v));
    return best;
}

auto Graph::max_degree() const -> std::size_t
{
    std::size_t best = 0;
    for (VertexId v = 0; v < order(); ++v)
        best = std::max(best, degree(v));
    return best;
}

auto Graph::is_connected() const -> bool
{
    if (order() == 0)
        return true;
    std::vector<char> seen(order(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : neighbours(v))
            if (! seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == order();
}

auto Graph::operator==(const Graph & other) const -> bool
{
    return dimension_ == other.dimension_ && labels_ == other.labels_ && edges_ == other.edges_
        && order() == other.order();
}

auto share(Graph g) -> GraphPtr
{
    return std::make_shared<const Graph>(std::move(g));
}

auto build_hypercube(int dimension) -> Graph
{
    if (dimension < 0)
        throw DomainError("negative dimension");
    if (dimension > max_construct_dimension)
        throw ResourceError("dimension " + std::to_string(dimension) + " exceeds the construction guard of " + std::to_string(max_construct_dimension));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(dimension) << (dimension > 0 ? dimension - 1 : 0));
    VertexId count = VertexId{1} << dimension;
    for (VertexId v = 0; v < count; ++v)
        for (int b = 0; b < dimension; ++b) {
            VertexId w = v ^ (VertexId{1} << b);
            if (v < w)
                edges.push_back({v, w});
        }
    return Graph::cube(dimension, std::move(edges));
}

auto make_path(std::size_t order) -> Graph
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < order; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
    return Graph::on_vertices(order, std::move(edges));
}

auto make_cycle(std::size_t order) -> Graph
{
    if (order < 3)
        throw DomainError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % order)});
    return Graph::on_vertices(order, std::move(edges));
}

auto make_complete(std::size_t order) -> Graph
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j)
            edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
    return Graph::on_vertices(order, std::move(edges));
}

auto cartesian_product(const Graph & g, const Graph & h) -> Graph
{
    auto gn = g.order(), hn = h.order();
    if (gn * hn > (std::size_t{1} << max_construct_dimension))
        throw ResourceError("cartesian product exceeds the construction guard");

    auto id = [hn](VertexId a, VertexId x) { return static_cast<VertexId>(a * hn + x); };

    std::vector<Edge> edges;
    edges.reserve(g.size() * hn + gn * h.size());
    for (auto & e : g.edges())
        for (VertexId x = 0; x < hn; ++x)
            edges.push_back({id(e.u, x), id(e.v, x)});
    for (VertexId a = 0; a < gn; ++a)
        for (auto & e : h.edges())
            edges.push_back({id(a, e.u), id(a, e.v)});

    if (g.is_cube() && h.is_cube())
        return Graph::cube(*g.dimension() + *h.dimension(), std::move(edges));

    std::vector<std::string> labels;
    labels.reserve(gn * hn);
    for (VertexId a = 0; a < gn; ++a)
        for (VertexId x = 0; x < hn; ++x)
            labels.push_back("(" + g.label(a) + "," + h.label(x) + ")");
    return Graph::labelled(std::move(labels), std::move(edges));
}

auto twin(const Graph & g, VertexId v) -> VertexId
{
    if (! g.is_cube() || *g.dimension() < 1)
        throw DomainError("twin requires a cube graph of dimension at least 1");
    if (v >= g.order())
        throw DomainError("vertex " + std::to_string(v) + " not in graph");

    std::optional<VertexId> result;
    for (auto w : g.neighbours(v))
        if (((w ^ v) & 1U) != 0) {
            if (result)
                throw DomainError("vertex " + g.label(v) + " has more than one neighbour across the top-level matching");
            result = w;
        }
    if (! result)
        throw DomainError("vertex " + g.label(v) + " has no neighbour across the top-level matching");
    return *result;
}

auto twin(const Graph & g, const BitVertex & v) -> BitVertex
{
    if (! g.is_cube() || v.length() != *g.dimension())
        throw DomainError("vertex " + v.str() + " not in graph");
    return BitVertex(twin(g, v.id()), v.length());
}

auto twisted_edges(const Graph & g) -> std::vector<Edge>
{
    std::vector<Edge> result;
    if (! g.is_cube())
        return result;
    for (auto & e : g.edges())
        if (std::popcount(e.u ^ e.v) > 1)
            result.push_back(e);
    return result;
}

void for_each_simple_cycle(const Graph & g, const std::function<auto(std::span<const VertexId>)->bool> & visit)
{
    std::vector<VertexId> path;
    std::vector<char> on_path(g.order(), 0);
    bool stop = false;

    auto extend = [&](auto & self, VertexId start) -> void {
        auto v = path.back();
        for (auto w : g.neighbours(v)) {
            if (stop)
                return;
            if (w == start) {
                if (path.size() >= 3 && ! visit(path))
                    stop = true;
            }
            else if (w > start && ! on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                self(self, start);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };

    for (VertexId s = 0; s < g.order() && ! stop; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(extend, s);
        on_path[s] = 0;
    }
}

}
