#ifndef ZFCUBE_SERIALIZE_HPP
#define ZFCUBE_SERIALIZE_HPP

#include <zfcube/arc_set.hpp>
#include <zfcube/forcing.hpp>
#include <zfcube/graph.hpp>
#include <zfcube/minority.hpp>
#include <zfcube/twist_spec.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace zfcube {

/// A graph plus the optional payloads the tools pass around.
///
/// JSON layout (vertices written by label, bit strings for cube graphs):
///
///     {"dimension": 3, "vertices": ["000", ...], "edges": [["000","001"], ...],
///      "arcs": [["000","100"], ...], "twisted_edges": [...],
///      "bridge_arc": ["0110","0111"], "set": ["000", ...]}
///
/// "dimension" is null for general graphs. "arcs", "bridge_arc" and "set"
/// are present only when attached. "twisted_edges" is written for cube
/// graphs and, when read back, must match the edges of Hamming distance
/// greater than one.
struct GraphDocument {
    GraphPtr graph;
    std::optional<ArcSet> arcs;
    std::optional<Arc> bridge_arc;
    std::optional<VertexSet> set;

    auto operator==(const GraphDocument & other) const -> bool;
};

auto make_document(GraphPtr graph) -> GraphDocument;
auto make_document(const MinorityCube & cube) -> GraphDocument;

/// Compact, deterministic: identical documents give identical bytes.
auto to_json(const GraphDocument & doc) -> std::string;

/// Throws ParseError, never returns a partially read document.
auto parse_document(std::string_view text) -> GraphDocument;

/// Graphviz digraph. Arcs are drawn as arrows, other edges with dir=none,
/// twisted edges with color=red and the bridge arc in bold.
auto to_dot(const GraphDocument & doc) -> std::string;

/// [["forcer","forced"], ...] in force order.
auto trace_to_json(const Graph & g, const ForcingTrace & trace) -> std::string;

/// Either {"levels": [[...], ...]}, one matching per level applied to both
/// halves, or the recursive form {"left": ..., "right": ..., "matching": [...]}
/// with {} as the leaf. Matching entries are target bit strings (or ids)
/// indexed by source id. Throws ParseError; a matching that is not a
/// bijection is reported as a ParseError at its location.
auto parse_twist_spec(std::string_view text) -> TwistSpec;

}

#endif
