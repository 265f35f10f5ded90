#ifndef ZFCUBE_MINORITY_HPP
#define ZFCUBE_MINORITY_HPP

#include <zfcube/arc_set.hpp>
#include <zfcube/graph.hpp>
#include <zfcube/twist_spec.hpp>

#include <optional>
#include <vector>

namespace zfcube {

inline constexpr int min_minority_dimension = 3;
inline constexpr int max_minority_dimension = 12;

/// The minority cube of dimension n together with its forcing arc set.
///
/// Dimension 3 is Q_3 with the chains 000->100->110, 001->101->111 and the
/// isolated vertices 010, 011. Dimension n >= 4 joins two copies of
/// dimension n-1 using the standard matching except for the transposition
/// 01 0^(n-4) 0 <-> 10 0^(n-4) 1, keeps both copies' arcs, and adds the
/// bridge arc 01 0^(n-4) 10 -> 01 0^(n-4) 11.
///
/// Written out, the arcs are
///   00a -> 10a -> 11a                     for every a in {0,1}^(n-2)
///   01 0^k 10 b -> 01 0^k 11 b            for 0 <= k <= n-4, b in {0,1}^(n-k-4)
/// giving 2^(n-1) + 2^(n-3) - 1 arcs and the two isolated vertices
/// 01 0^(n-3) 0 and 01 0^(n-3) 1.
struct MinorityCube {
    int dimension;
    TwistSpec spec;
    ArcSet arcs;
    /// Absent at dimension 3.
    std::optional<Arc> bridge_arc;
    /// The two twisted edges added at the top level (empty at dimension 3).
    std::vector<Edge> level_twisted_edges;
    /// All twisted edges, inherited ones included.
    std::vector<Edge> twisted_edges;

    auto graph() const -> const Graph & { return arcs.host(); }
};

/// Throws DomainError below dimension 3, ResourceError above 12.
auto minority_twist_spec(int n) -> TwistSpec;

/// Builds the cube and arc set by repeated doubling.
auto build_minority_recursive(int n) -> MinorityCube;

/// Builds the arc set from the written-out description, on the graph of
/// minority_twist_spec(n).
auto build_minority_closed_form(int n) -> ArcSet;

enum class VertexClass { c00, c01, c10, c11 };

auto to_string(VertexClass c) -> const char *;

/// Class given by the two leftmost bits. Requires length >= 2.
auto classify(const BitVertex & v) -> VertexClass;

/// Arc membership in the dimension-v.length() minority arc set, decided
/// from the bit string alone. Requires length >= 3.
auto has_out_arc(const BitVertex & v) -> bool;
auto has_in_arc(const BitVertex & v) -> bool;

/// The two f-isolated vertices 01 0^(n-3) 0 and 01 0^(n-3) 1.
auto minority_isolated_vertices(int n) -> std::vector<BitVertex>;

/// Chain-initial vertices of the minority arc set, of size
/// 2^(n-1) - 2^(n-3) + 1.
auto minority_zero_forcing_set(int n) -> VertexSet;

}

#endif
