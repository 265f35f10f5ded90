#include <zfcube/errors.hpp>
#include <zfcube/serialize.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace zfcube {

using Json = nlohmann::ordered_json;

auto GraphDocument::operator==(const GraphDocument & other) const -> bool
{
    if ((graph == nullptr) != (other.graph == nullptr))
        return false;
    if (graph && ! (*graph == *other.graph))
        return false;
    return arcs == other.arcs && bridge_arc == other.bridge_arc && set == other.set;
}

auto make_document(GraphPtr graph) -> GraphDocument
{
    return GraphDocument{std::move(graph), std::nullopt, std::nullopt, std::nullopt};
}

auto make_document(const MinorityCube & cube) -> GraphDocument
{
    GraphDocument doc = make_document(cube.arcs.host_ptr());
    doc.arcs = cube.arcs;
    doc.bridge_arc = cube.bridge_arc;
    return doc;
}

namespace {
    auto pair_json(const Graph & g, VertexId a, VertexId b) -> Json
    {
        return Json::array({g.label(a), g.label(b)});
    }

    auto document_json(const GraphDocument & doc) -> Json
    {
        const auto & g = *doc.graph;
        Json j;
        j["dimension"] = g.dimension() ? Json(*g.dimension()) : Json(nullptr);

        auto & vertices = j["vertices"] = Json::array();
        for (VertexId v = 0; v < g.order(); ++v)
            vertices.push_back(g.label(v));

        auto & edges = j["edges"] = Json::array();
        for (auto & e : g.edges())
            edges.push_back(pair_json(g, e.u, e.v));

        if (doc.arcs) {
            auto & arcs = j["arcs"] = Json::array();
            for (auto & a : doc.arcs->arcs())
                arcs.push_back(pair_json(g, a.tail, a.head));
        }

        if (g.is_cube()) {
            auto & twisted = j["twisted_edges"] = Json::array();
            for (auto & e : twisted_edges(g))
                twisted.push_back(pair_json(g, e.u, e.v));
        }

        if (doc.bridge_arc)
            j["bridge_arc"] = pair_json(g, doc.bridge_arc->tail, doc.bridge_arc->head);

        if (doc.set) {
            auto & set = j["set"] = Json::array();
            for (auto v : *doc.set)
                set.push_back(g.label(v));
        }
        return j;
    }

    auto pointer(const std::string & base, std::size_t index) -> std::string
    {
        return base + "/" + std::to_string(index);
    }

    auto vertex_at(const Graph & g, const Json & j, const std::string & where) -> VertexId
    {
        if (! j.is_string())
            throw ParseError("expected a vertex label", where);
        auto v = g.find(j.get<std::string>());
        if (! v)
            throw ParseError("unknown vertex '" + j.get<std::string>() + "'", where);
        return *v;
    }

    auto pair_at(const Graph & g, const Json & j, const std::string & where) -> std::pair<VertexId, VertexId>
    {
        if (! j.is_array() || j.size() != 2)
            throw ParseError("expected a pair of vertex labels", where);
        return {vertex_at(g, j[0], pointer(where, 0)), vertex_at(g, j[1], pointer(where, 1))};
    }

    auto array_at(const Json & j, const char * key) -> const Json &
    {
        if (! j.contains(key))
            throw ParseError(std::string("missing \"") + key + "\"", "/");
        const auto & a = j[key];
        if (! a.is_array())
            throw ParseError(std::string("\"") + key + "\" must be an array", std::string("/") + key);
        return a;
    }

    auto optional_array(const Json & j, const char * key) -> const Json *
    {
        if (! j.contains(key) || j[key].is_null())
            return nullptr;
        if (! j[key].is_array())
            throw ParseError(std::string("\"") + key + "\" must be an array", std::string("/") + key);
        return &j[key];
    }

    auto parse_json(std::string_view text) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const Json::parse_error & e) {
            throw ParseError("malformed JSON: " + std::string(e.what()), "byte " + std::to_string(e.byte));
        }
    }
}

auto to_json(const GraphDocument & doc) -> std::string
{
    if (! doc.graph)
        throw DomainError("document has no graph");
    return document_json(doc).dump() + "\n";
}

auto parse_document(std::string_view text) -> GraphDocument
{
    auto j = parse_json(text);
    if (! j.is_object())
        throw ParseError("document must be a JSON object", "/");

    std::optional<int> dimension;
    if (j.contains("dimension") && ! j["dimension"].is_null()) {
        if (! j["dimension"].is_number_integer())
            throw ParseError("\"dimension\" must be an integer or null", "/dimension");
        dimension = j["dimension"].get<int>();
        if (*dimension < 0 || *dimension > max_construct_dimension)
            throw ParseError("dimension out of range", "/dimension");
    }

    const auto & vertices = array_at(j, "vertices");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (! vertices[i].is_string())
            throw ParseError("vertex label must be a string", pointer("/vertices", i));
        labels.push_back(vertices[i].get<std::string>());
    }

    // edges are resolved against a vertex-only graph first
    GraphPtr bare;
    try {
        if (dimension) {
            auto expected = std::size_t{1} << *dimension;
            if (labels.size() != expected)
                throw ParseError("dimension " + std::to_string(*dimension) + " needs " + std::to_string(expected) + " vertices", "/vertices");
            auto probe = Graph::cube(*dimension, {});
            std::vector<char> seen(expected, 0);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                auto v = probe.find(labels[i]);
                if (! v)
                    throw ParseError("'" + labels[i] + "' is not a bit string of length " + std::to_string(*dimension), pointer("/vertices", i));
                if (seen[*v])
                    throw ParseError("duplicate vertex '" + labels[i] + "'", pointer("/vertices", i));
                seen[*v] = 1;
            }
            bare = share(std::move(probe));
        }
        else
            bare = share(Graph::labelled(labels, {}));
    }
    catch (const ValidationError & e) {
        throw ParseError(e.what(), "/vertices");
    }
    catch (const DomainError & e) {
        throw ParseError(e.what(), "/vertices");
    }

    const auto & edge_list = array_at(j, "edges");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        auto [u, v] = pair_at(*bare, edge_list[i], pointer("/edges", i));
        if (u == v)
            throw ParseError("loop edge", pointer("/edges", i));
        edges.push_back({u, v});
    }

    GraphDocument doc;
    doc.graph = share(dimension ? Graph::cube(*dimension, std::move(edges)) : Graph::labelled(std::move(labels), std::move(edges)));
    const auto & g = *doc.graph;

    if (auto arcs = optional_array(j, "arcs")) {
        std::vector<Arc> list;
        for (std::size_t i = 0; i < arcs->size(); ++i) {
            auto [t, h] = pair_at(g, (*arcs)[i], pointer("/arcs", i));
            list.push_back({t, h});
        }
        doc.arcs = ArcSet(doc.graph, std::move(list));
    }

    if (auto twisted = optional_array(j, "twisted_edges")) {
        std::vector<Edge> listed;
        for (std::size_t i = 0; i < twisted->size(); ++i) {
            auto [u, v] = pair_at(g, (*twisted)[i], pointer("/twisted_edges", i));
            listed.push_back({std::min(u, v), std::max(u, v)});
        }
        std::sort(listed.begin(), listed.end());
        listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
        if (listed != twisted_edges(g))
            throw ParseError("twisted_edges does not match the edges whose endpoints differ in more than one bit", "/twisted_edges");
    }

    if (j.contains("bridge_arc") && ! j["bridge_arc"].is_null()) {
        auto [t, h] = pair_at(g, j["bridge_arc"], "/bridge_arc");
        doc.bridge_arc = Arc{t, h};
    }

    if (auto set = optional_array(j, "set")) {
        VertexSet ids;
        for (std::size_t i = 0; i < set->size(); ++i)
            ids.push_back(vertex_at(g, (*set)[i], pointer("/set", i)));
        doc.set = make_vertex_set(std::move(ids));
    }

    return doc;
}

namespace {
    auto quoted(const std::string & s) -> std::string
    {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    }
}

auto to_dot(const GraphDocument & doc) -> std::string
{
    if (! doc.graph)
        throw DomainError("document has no graph");
    const auto & g = *doc.graph;
    auto twisted = twisted_edges(g);

    std::ostringstream out;
    out << "digraph zfcube {\n";
    out << "  node [shape=ellipse, fontname=\"monospace\"];\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        out << "  " << quoted(g.label(v));
        if (doc.set && std::binary_search(doc.set->begin(), doc.set->end(), v))
            out << " [style=filled, fillcolor=lightblue]";
        out << ";\n";
    }

    for (auto & e : g.edges()) {
        std::vector<std::string> attributes;
        VertexId from = e.u, to = e.v;
        bool arc = false;
        if (doc.arcs && doc.arcs->contains(e.u, e.v))
            arc = true;
        else if (doc.arcs && doc.arcs->contains(e.v, e.u)) {
            arc = true;
            std::swap(from, to);
        }
        bool is_twisted = std::binary_search(twisted.begin(), twisted.end(), e);

        if (! arc)
            attributes.push_back("dir=none");
        else
            attributes.push_back("penwidth=2");
        if (is_twisted)
            attributes.push_back("color=red");
        else if (arc)
            attributes.push_back("color=blue");
        if (arc && doc.bridge_arc && doc.bridge_arc->tail == from && doc.bridge_arc->head == to)
            attributes.push_back("style=bold, label=\"bridge\"");

        out << "  " << quoted(g.label(from)) << " -> " << quoted(g.label(to)) << " [";
        for (std::size_t i = 0; i < attributes.size(); ++i)
            out << (i ? ", " : "") << attributes[i];
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

auto trace_to_json(const Graph & g, const ForcingTrace & trace) -> std::string
{
    Json j = Json::array();
    for (auto & f : trace.forces)
        j.push_back(pair_json(g, f.forcer, f.forced));
    return j.dump();
}

namespace {
    auto matching_at(const Json & j, int half_log2, const std::string & where) -> std::vector<VertexId>
    {
        if (! j.is_array())
            throw ParseError("matching must be an array", where);
        std::size_t half = std::size_t{1} << half_log2;
        if (j.size() != half)
            throw ParseError("matching needs " + std::to_string(half) + " entries", where);
        std::vector<VertexId> result;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto & e = j[i];
            if (e.is_number_unsigned())
                result.push_back(e.get<VertexId>());
            else if (e.is_string()) {
                auto text = e.get<std::string>();
                if (text.size() != static_cast<std::size_t>(half_log2))
                    throw ParseError("matching entry must be a bit string of length " + std::to_string(half_log2), pointer(where, i));
                try {
                    result.push_back(BitVertex::parse(text).id());
                }
                catch (const DomainError & err) {
                    throw ParseError(err.what(), pointer(where, i));
                }
            }
            else
                throw ParseError("matching entry must be a bit string or an id", pointer(where, i));
        }
        return result;
    }

    auto spec_dimension(const Json & j, const std::string & where, int depth) -> int
    {
        if (depth > max_construct_dimension)
            throw ParseError("twist spec nested too deeply", where);
        if (! j.is_object())
            throw ParseError("twist spec node must be an object", where);
        if (j.empty())
            return 0;
        if (! j.contains("left") || ! j.contains("right"))
            throw ParseError("twist spec node needs \"left\", \"right\" and \"matching\"", where);
        return spec_dimension(j["left"], where + "/left", depth + 1) + 1;
    }

    auto recursive_spec(const Json & j, const std::string & where) -> TwistSpec
    {
        auto n = spec_dimension(j, where, 0);
        if (n == 0)
            return TwistSpec::leaf();
        if (! j.contains("matching"))
            throw ParseError("twist spec node needs \"matching\"", where);
        auto left = recursive_spec(j["left"], where + "/left");
        auto right = recursive_spec(j["right"], where + "/right");
        auto matching = matching_at(j["matching"], n - 1, where + "/matching");
        try {
            return TwistSpec::node(std::move(left), std::move(right), std::move(matching));
        }
        catch (const ValidationError & e) {
            throw ParseError(e.what(), where);
        }
    }
}

auto parse_twist_spec(std::string_view text) -> TwistSpec
{
    auto j = parse_json(text);
    if (! j.is_object())
        throw ParseError("twist spec must be a JSON object", "/");

    if (j.contains("levels")) {
        const auto & levels = j["levels"];
        if (! levels.is_array())
            throw ParseError("\"levels\" must be an array", "/levels");
        if (levels.size() > static_cast<std::size_t>(max_construct_dimension))
            throw ParseError("too many levels", "/levels");
        std::vector<std::vector<VertexId>> matchings;
        for (std::size_t k = 0; k < levels.size(); ++k)
            matchings.push_back(matching_at(levels[k], static_cast<int>(k), pointer("/levels", k)));
        try {
            return TwistSpec::uniform(matchings);
        }
        catch (const ValidationError & e) {
            throw ParseError(e.what(), "/levels");
        }
    }
    return recursive_spec(j, "");
}

}
