#ifndef ZFCUBE_GRAPH_HPP
#define ZFCUBE_GRAPH_HPP

#include <zfcube/vertex.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace zfcube {

/// Largest dimension any constructor will build.
inline constexpr int max_construct_dimension = 20;

/// Largest dimension accepted by the exponential algorithms.
inline constexpr int max_dense_dimension = 16;

/// Undirected edge, stored with u < v.
struct Edge {
    VertexId u;
    VertexId v;

    auto operator<=>(const Edge &) const = default;
};

/// Immutable simple undirected graph with compressed sorted adjacency.
///
/// A graph built with a dimension is a cube graph: its vertices are all
/// bit strings of that length, and vertex id equals the bit string read as
/// a binary numeral. Other graphs carry one free-form label per vertex.
class Graph {
  public:
    /// Cube graph on {0,1}^dimension. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected with ValidationError.
    static auto cube(int dimension, std::vector<Edge> edges) -> Graph;

    /// General graph on labels.size() vertices.
    static auto labelled(std::vector<std::string> labels, std::vector<Edge> edges) -> Graph;

    /// General graph with labels "0", "1", ...
    static auto on_vertices(std::size_t order, std::vector<Edge> edges) -> Graph;

    auto order() const -> std::size_t { return offsets_.size() - 1; }
    auto size() const -> std::size_t { return edges_.size(); }

    auto is_cube() const -> bool { return dimension_.has_value(); }
    auto dimension() const -> std::optional<int> { return dimension_; }

    auto label(VertexId v) const -> std::string;
    auto find(std::string_view label) const -> std::optional<VertexId>;

    /// Sorted ascending.
    auto neighbours(VertexId v) const -> std::span<const VertexId>;
    auto degree(VertexId v) const -> std::size_t;
    auto adjacent(VertexId u, VertexId v) const -> bool;

    /// Sorted lexicographically, each with u < v.
    auto edges() const -> std::span<const Edge> { return edges_; }

    auto min_degree() const -> std::size_t;
    auto max_degree() const -> std::size_t;
    auto is_connected() const -> bool;

    auto operator==(const Graph & other) const -> bool;

  private:
    Graph() = default;
    void build_adjacency();

    std::optional<int> dimension_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> label_index_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> targets_;
};

using GraphPtr = std::shared_ptr<const Graph>;

auto share(Graph g) -> GraphPtr;

/// Q_n: bit strings adjacent iff they differ in exactly one position.
auto build_hypercube(int dimension) -> Graph;

auto make_path(std::size_t order) -> Graph;
auto make_cycle(std::size_t order) -> Graph;
auto make_complete(std::size_t order) -> Graph;

/// G □ H. Vertex (g, h) gets id g * |V(H)| + h. When both factors are cube
/// graphs the result is a cube graph labelled by concatenation, so
/// Q_a □ Q_b is exactly Q_(a+b).
auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

/// The unique neighbour of v whose final bit differs from v's.
auto twin(const Graph & g, VertexId v) -> VertexId;
auto twin(const Graph & g, const BitVertex & v) -> BitVertex;

/// Edges of a cube graph whose endpoints differ in more than one bit.
auto twisted_edges(const Graph & g) -> std::vector<Edge>;

/// Calls visit once per simple cycle (length >= 3) in each of its two
/// directions, always starting at the cycle's smallest vertex. Returning
/// false from visit stops the enumeration.
void for_each_simple_cycle(const Graph & g, const std::function<auto(std::span<const VertexId>)->bool> & visit);

}

#endif
