#ifndef ZFCUBE_VERTEX_HPP
#define ZFCUBE_VERTEX_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zfcube {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// A bit string of fixed length. Position 0 is the leftmost character and
/// the most significant bit of id(); appending a bit extends on the right.
class BitVertex {
  public:
    BitVertex() = default;
    BitVertex(VertexId id, int length);

    /// Throws DomainError unless text consists of '0' and '1' only.
    static auto parse(std::string_view text) -> BitVertex;

    auto id() const -> VertexId { return id_; }
    auto length() const -> int { return length_; }

    /// Bit at position i, counted from the left.
    auto bit(int i) const -> int;
    auto last_bit() const -> int { return static_cast<int>(id_ & 1U); }

    auto append(int b) const -> BitVertex;
    auto drop_last() const -> BitVertex;

    auto str() const -> std::string;

    auto operator<=>(const BitVertex &) const = default;

  private:
    VertexId id_ = 0;
    int length_ = 0;
};

auto hamming_distance(const BitVertex & a, const BitVertex & b) -> int;

/// Turns an arbitrary list of ids into a VertexSet.
auto make_vertex_set(std::vector<VertexId> ids) -> VertexSet;

}

#endif
