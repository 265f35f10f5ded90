#ifndef ZFCUBE_ARC_SET_HPP
#define ZFCUBE_ARC_SET_HPP

#include <zfcube/graph.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zfcube {

struct Arc {
    VertexId tail;
    VertexId head;

    auto operator<=>(const Arc &) const = default;
};

/// A set of ordered vertex pairs over a host graph. Construction only
/// checks that endpoints exist; use validate() for the arc-set conditions
/// (each pair is an edge, never both orientations).
class ArcSet {
  public:
    ArcSet(GraphPtr host, std::vector<Arc> arcs);

    auto host() const -> const Graph & { return *host_; }
    auto host_ptr() const -> const GraphPtr & { return host_; }

    /// Sorted by (tail, head), no duplicates.
    auto arcs() const -> std::span<const Arc> { return arcs_; }
    auto size() const -> std::size_t { return arcs_.size(); }
    auto empty() const -> bool { return arcs_.empty(); }

    auto contains(VertexId tail, VertexId head) const -> bool;
    auto out_degree(VertexId v) const -> std::size_t;
    auto in_degree(VertexId v) const -> std::size_t;

    /// Out-neighbour / in-neighbour, when unique.
    auto successor(VertexId v) const -> std::optional<VertexId>;
    auto predecessor(VertexId v) const -> std::optional<VertexId>;

    /// No arc enters or leaves v.
    auto is_isolated(VertexId v) const -> bool { return out_degree(v) == 0 && in_degree(v) == 0; }

    auto operator==(const ArcSet & other) const -> bool;

  private:
    GraphPtr host_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> out_degree_, in_degree_;
    std::vector<VertexId> in_from_;
};

struct ArcViolation {
    enum class Kind { NotAnEdge, BothOrientations };
    Arc arc;
    Kind kind;

    auto describe(const Graph & host) const -> std::string;
};

/// Every pair violating edge membership or antisymmetry. Empty means ok.
auto validate(const ArcSet & f) -> std::vector<ArcViolation>;

/// Throws StructureError unless every vertex has in- and out-degree at most
/// one and the arcs contain no directed cycle.
void require_dipath_forest(const ArcSet & f);
auto is_dipath_forest(const ArcSet & f) -> bool;

/// Partition of the host's vertices into maximal directed paths. An
/// f-isolated vertex is a chain with no arcs.
struct ChainDecomposition {
    std::vector<std::vector<VertexId>> chains;

    /// First vertex of every chain; the zero forcing set the arcs imply.
    auto initial_vertices() const -> VertexSet;

    /// counts[k] = number of chains with exactly k arcs.
    auto arc_count_census() const -> std::vector<std::size_t>;
};

/// Chains ordered by initial vertex. Throws StructureError naming the
/// offending vertex if f is not a dipath forest.
auto decompose(const ArcSet & f) -> ChainDecomposition;

/// Whether cycle v_1 ... v_k v_1 has no two cyclically consecutive steps
/// (v_i, v_(i+1)) outside f. A step that runs against an arc counts as
/// outside. Throws DomainError unless the vertices are distinct, k >= 3
/// and consecutive vertices (cyclically) are adjacent.
auto is_chain_twist(const ArcSet & f, std::span<const VertexId> cycle) -> bool;

/// Path analogue of is_chain_twist over the interior positions. Throws
/// DomainError unless the sequence is a simple path with at least two
/// vertices.
auto is_chain_twist_path(const ArcSet & f, std::span<const VertexId> path) -> bool;

enum class TwistDetector {
    /// Simple-cycle enumeration with the cycle predicate. Ground truth;
    /// guarded to hosts of at most 16 vertices.
    exhaustive,
    /// Cycle search in the graph of directed edges, where a step may leave
    /// along a non-arc only if it arrived along an arc, and may not reverse
    /// the edge it arrived on. Requires in- and out-degree at most one.
    walk
};

/// Largest host the exhaustive detector accepts.
inline constexpr std::size_t max_exhaustive_twist_order = 16;

/// A chain twist of f, or nullopt if there is none. The exhaustive detector
/// returns the lexicographically least witness that starts at its smallest
/// vertex; the walk detector splits the first closed walk it finds at
/// repeated vertices until a simple cycle remains.
auto find_chain_twist(const ArcSet & f, TwistDetector detector = TwistDetector::exhaustive)
    -> std::optional<std::vector<VertexId>>;

/// Outcome of executing an arc set as forces.
struct ArcExecution {
    /// Arcs in the order they were performed.
    std::vector<Arc> performed;
    bool complete = false;
};

/// Starting from the chain-initial vertices, repeatedly performs the arc
/// with the smallest tail whose tail is blue and whose head is the tail's
/// only white neighbour. Throws StructureError if f is not a dipath forest.
auto execute_arcs(const ArcSet & f) -> ArcExecution;

/// Whether f is the complete force record of some zero forcing process.
auto is_forcing_arc_set(const ArcSet & f) -> bool;

/// Copy of f inside every G-layer of G □ H: ((a, x), (b, x)) for each arc
/// (a, b) of f and each vertex x of h. Throws DomainError if f is not a
/// forcing arc set.
auto product_arcset(const ArcSet & f, const Graph & h) -> ArcSet;

}

#endif
