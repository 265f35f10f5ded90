#ifndef ZFCUBE_SOLVER_HPP
#define ZFCUBE_SOLVER_HPP

#include <zfcube/graph.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace zfcube {

/// Graphs up to this order are solved without asking.
inline constexpr std::size_t max_default_solve_order = 32;

/// Hard limit of the bitset search.
inline constexpr std::size_t max_solve_order = 64;

/// Minimum degree. Every zero forcing set of a graph with an edge has at
/// least this many vertices.
auto zero_forcing_lower_bound(const Graph & g) -> std::size_t;

struct UpperBound {
    std::size_t size;
    VertexSet witness;
};

/// For a twisted hypercube of dimension n >= 1: the half whose bit strings
/// end in 0, which always forces. Throws DomainError for other graphs.
auto zero_forcing_upper_bound(const Graph & g) -> UpperBound;

struct SolveOptions {
    /// Give up after this size.
    std::optional<std::size_t> max_k;
    std::optional<std::chrono::duration<double>> time_budget;
    std::optional<std::uint64_t> subset_budget;
    unsigned workers = 1;
    /// Needed above max_default_solve_order vertices.
    bool allow_large = false;
};

enum class SolveStatus { exact, inconclusive };

struct SolveResult {
    SolveStatus status = SolveStatus::inconclusive;
    /// Set when status is exact.
    std::optional<std::size_t> z;
    /// Lexicographically least minimum zero forcing set when exact, else
    /// the best forcing set known.
    VertexSet witness;
    /// Every set smaller than lower was ruled out; upper is achievable.
    std::size_t lower = 0, upper = 0;
    std::uint64_t subsets_tested = 0;
    std::chrono::duration<double> elapsed{};
};

/// Exact zero forcing number by size-ordered subset enumeration.
///
/// Sizes are tried upward from max(1, minimum degree); at each size the
/// subsets are visited in lexicographic order, sharded by first element.
/// A candidate already forced by the chosen prefix is skipped: adding it
/// changes nothing, so the set reduces to a smaller one that has already
/// been ruled out. The witness and subsets_tested do not depend on the
/// number of workers unless a budget runs out.
///
/// Throws ResourceError above max_solve_order vertices, or above
/// max_default_solve_order without allow_large.
auto solve_exact(const Graph & g, const SolveOptions & options = {}) -> SolveResult;

}

#endif
