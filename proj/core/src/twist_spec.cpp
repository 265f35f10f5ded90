#include <zfcube/errors.hpp>
#include <zfcube/twist_spec.hpp>

#include <numeric>

namespace zfcube {

auto TwistSpec::leaf() -> TwistSpec
{
    return TwistSpec{};
}

auto TwistSpec::node(TwistSpec left, TwistSpec right, std::vector<VertexId> matching) -> TwistSpec
{
    if (left.dimension() != right.dimension())
        throw ValidationError("twist spec children have dimensions " + std::to_string(left.dimension()) + " and " + std::to_string(right.dimension()));
    if (left.dimension() + 1 > max_construct_dimension)
        throw ResourceError("twist spec dimension exceeds the construction guard");

    std::size_t half = std::size_t{1} << left.dimension();
    if (matching.size() != half)
        throw ValidationError("matching has " + std::to_string(matching.size()) + " entries, expected " + std::to_string(half));
    std::vector<char> hit(half, 0);
    for (auto m : matching) {
        if (m >= half)
            throw ValidationError("matching target " + std::to_string(m) + " out of range");
        if (hit[m])
            throw ValidationError("matching is not a bijection: target " + std::to_string(m) + " used twice");
        hit[m] = 1;
    }

    TwistSpec result;
    result.dimension_ = left.dimension() + 1;
    result.left_ = std::make_shared<const TwistSpec>(std::move(left));
    result.right_ = std::make_shared<const TwistSpec>(std::move(right));
    result.matching_ = std::move(matching);
    return result;
}

auto identity_matching(int half_order_log2) -> std::vector<VertexId>
{
    std::vector<VertexId> result(std::size_t{1} << half_order_log2);
    std::iota(result.begin(), result.end(), VertexId{0});
    return result;
}

auto TwistSpec::identity(int dimension) -> TwistSpec
{
    if (dimension < 0)
        throw DomainError("negative dimension");
    std::vector<std::vector<VertexId>> levels;
    for (int k = 1; k <= dimension; ++k)
        levels.push_back(identity_matching(k - 1));
    return uniform(levels);
}

auto TwistSpec::uniform(const std::vector<std::vector<VertexId>> & levels) -> TwistSpec
{
    auto current = std::make_shared<const TwistSpec>(leaf());
    for (auto & m : levels) {
        TwistSpec next;
        // validate through node(), then re-share the single child
        auto checked = node(*current, *current, m);
        next.dimension_ = checked.dimension_;
        next.left_ = current;
        next.right_ = current;
        next.matching_ = std::move(checked.matching_);
        current = std::make_shared<const TwistSpec>(std::move(next));
    }
    return *current;
}

auto TwistSpec::left() const -> const TwistSpec &
{
    if (is_leaf())
        throw DomainError("leaf twist spec has no children");
    return *left_;
}

auto TwistSpec::right() const -> const TwistSpec &
{
    if (is_leaf())
        throw DomainError("leaf twist spec has no children");
    return *right_;
}

namespace {
    // Appends the edges of spec's cube with every vertex id v mapped to
    // (v << shift) | suffix.
    void collect_edges(const TwistSpec & spec, int shift, VertexId suffix, std::vector<Edge> & out)
    {
        if (spec.is_leaf())
            return;
        collect_edges(spec.left(), shift + 1, suffix, out);
        collect_edges(spec.right(), shift + 1, suffix | (VertexId{1} << shift), out);
        auto m = spec.matching();
        for (VertexId a = 0; a < m.size(); ++a) {
            VertexId from = (((a << 1) | 0U) << shift) | suffix;
            VertexId to = (((m[a] << 1) | 1U) << shift) | suffix;
            out.push_back({from, to});
        }
    }
}

auto build_twisted(const TwistSpec & spec) -> Graph
{
    if (spec.dimension() > max_construct_dimension)
        throw ResourceError("dimension " + std::to_string(spec.dimension()) + " exceeds the construction guard");
    std::vector<Edge> edges;
    auto n = spec.dimension();
    edges.reserve(n > 0 ? static_cast<std::size_t>(n) << (n - 1) : 0);
    collect_edges(spec, 0, 0, edges);
    return Graph::cube(n, std::move(edges));
}

namespace {
    auto recover(int dimension, const std::vector<Edge> & edges) -> std::optional<TwistSpec>
    {
        if (dimension == 0)
            return edges.empty() ? std::optional{TwistSpec::leaf()} : std::nullopt;

        std::size_t half = std::size_t{1} << (dimension - 1);
        std::vector<VertexId> matching(half, 0);
        std::vector<char> matched_left(half, 0), matched_right(half, 0);
        std::vector<Edge> left, right;

        for (auto & e : edges) {
            bool u_right = e.u & 1U, v_right = e.v & 1U;
            if (u_right == v_right) {
                (u_right ? right : left).push_back({e.u >> 1, e.v >> 1});
                continue;
            }
            auto l = (u_right ? e.v : e.u) >> 1, r = (u_right ? e.u : e.v) >> 1;
            if (matched_left[l] || matched_right[r])
                return std::nullopt;
            matched_left[l] = matched_right[r] = 1;
            matching[l] = r;
        }
        for (std::size_t a = 0; a < half; ++a)
            if (! matched_left[a])
                return std::nullopt;

        auto l = recover(dimension - 1, left);
        if (! l)
            return std::nullopt;
        auto r = recover(dimension - 1, right);
        if (! r)
            return std::nullopt;
        return TwistSpec::node(std::move(*l), std::move(*r), std::move(matching));
    }
}

auto recover_twist_spec(const Graph & g) -> std::optional<TwistSpec>
{
    if (! g.is_cube())
        return std::nullopt;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    return recover(*g.dimension(), edges);
}

}
